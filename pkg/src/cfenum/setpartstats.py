"""Set-partition statistics: opener/closer/insider/singleton classes,
per-element crossing/nesting and overlap/covering counts, exclusive and
block records, Wachs-White and intertwining statistics, master weights,
reversal, and weighted enumeration via restricted-growth words.

Elements are 1-based; the arc graph joins consecutive elements of a block.
"""

from .mpoly import Indeterminate, Monomial, MultiPoly, as_poly
from .permstats import UnknownWeightMap


class NotAPartition(ValueError):
    """The blocks do not partition 1..n."""


class SetPartition:
    """A partition of [n] into disjoint nonempty blocks.

    Blocks are stored sorted by their minimum; arcs join consecutive
    elements within each block.
    """

    __slots__ = ("n", "blocks", "arcs")

    def __init__(self, blocks, _trusted=False):
        blocks = tuple(sorted((tuple(sorted(b)) for b in blocks),
                              key=lambda b: b[0] if b else 0))
        n = sum(len(b) for b in blocks)
        if not _trusted:
            seen = set()
            for b in blocks:
                if not b:
                    raise NotAPartition("empty block")
                for e in b:
                    if not isinstance(e, int) or e < 1 or e > n or e in seen:
                        raise NotAPartition(
                            "blocks do not partition 1..%d" % n)
                    seen.add(e)
            if len(seen) != n:
                raise NotAPartition("blocks do not partition 1..%d" % n)
        arcs = []
        for b in blocks:
            for i in range(len(b) - 1):
                arcs.append((b[i], b[i + 1]))
        self.n = n
        self.blocks = blocks
        self.arcs = tuple(arcs)

    def __eq__(self, other):
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return "SetPartition(%r)" % ([list(b) for b in self.blocks],)


def setpart_from_blocks(blocks):
    return SetPartition(blocks)


def sp_reverse(pi):
    """Image of the partition under i -> n+1-i."""
    n = pi.n
    return SetPartition([[n + 1 - e for e in b] for b in pi.blocks],
                        _trusted=True)


class SPIndexProfile:
    """Per-element class, crossing/nesting/overlap/covering counts, and
    record flags (record flags are None for closers and singletons)."""

    __slots__ = ("index", "element_class", "cr", "ne", "qne", "ov", "cov",
                 "erec_flag", "brec_flag")

    def __init__(self, index, element_class, cr, ne, qne, ov, cov,
                 erec_flag, brec_flag):
        self.index = index
        self.element_class = element_class
        self.cr = cr
        self.ne = ne
        self.qne = qne
        self.ov = ov
        self.cov = cov
        self.erec_flag = erec_flag
        self.brec_flag = brec_flag

    def to_dict(self):
        return {"index": self.index, "element_class": self.element_class,
                "cr": self.cr, "ne": self.ne, "qne": self.qne,
                "ov": self.ov, "cov": self.cov,
                "erec": self.erec_flag, "brec": self.brec_flag}


def sp_index_profile(pi):
    """Full per-element profile.

    With the arc graph G (consecutive elements within a block):
      cr(j)  = #{i<j<k<l : (i,k) in G and (j,l) in G}
      ne(j)  = #{i<j<k<l : (i,l) in G and (j,k) in G}
      qne(j) = #{i<j<l   : (i,l) in G}
    and with block spans:
      ov(j)  = #{B : j not in B, min B < j < max B < max of j's block}
      cov(j) = #{B : j not in B, min B < j and j < max of j's block < max B}

    j is an exclusive record iff it is an opener or insider with ne(j)=0,
    and a block record iff it is an opener or insider with cov(j)=0.
    """
    n = pi.n
    arcs = pi.arcs
    spans = [(b[0], b[-1]) for b in pi.blocks]
    block_of = [0] * (n + 1)
    nxt = [0] * (n + 1)  # next element in the block, 0 if largest
    for bi, b in enumerate(pi.blocks):
        for i, e in enumerate(b):
            block_of[e] = bi
            if i + 1 < len(b):
                nxt[e] = b[i + 1]
    profiles = []
    for j in range(1, n + 1):
        b = pi.blocks[block_of[j]]
        if len(b) == 1:
            cls = "singleton"
        elif j == b[0]:
            cls = "opener"
        elif j == b[-1]:
            cls = "closer"
        else:
            cls = "insider"
        cr = ne = qne = 0
        k = nxt[j]
        for (i, l) in arcs:
            if i < j < l:
                qne += 1
            if k:
                if i < j < l < k:
                    cr += 1
                elif i < j and l > k:
                    ne += 1
        ov = cov = 0
        mx = spans[block_of[j]][1]
        for bi, (lo, hi) in enumerate(spans):
            if bi == block_of[j]:
                continue
            if lo < j < hi < mx:
                ov += 1
            elif lo < j < mx < hi:
                cov += 1
        if cls in ("opener", "insider"):
            erec = ne == 0
            brec = cov == 0
        else:
            erec = brec = None
        profiles.append(SPIndexProfile(j, cls, cr, ne, qne, ov, cov,
                                       erec, brec))
    return profiles


class SPStatTotals:
    """All whole-partition statistic totals."""

    __slots__ = ("n", "blocks", "m1", "mge2",
                 "crop", "crin", "neop", "nein", "cr", "ne", "psne",
                 "ov", "cov", "ovin", "covin", "pscov",
                 "erecop", "erecin", "nerecop", "nerecin", "erec",
                 "brecop", "brecin", "nbrecop", "nbrecin", "brec",
                 "lb", "ls", "lsprime", "rb", "rs",
                 "iota", "iota_prime", "cc")

    def to_dict(self):
        return {k: getattr(self, k) for k in self.__slots__}


def sp_stat_totals(pi, profiles=None):
    """Compute every statistic total; consistent with sp_index_profile."""
    if profiles is None:
        profiles = sp_index_profile(pi)
    t = SPStatTotals()
    t.n = pi.n
    t.blocks = len(pi.blocks)
    t.m1 = sum(1 for b in pi.blocks if len(b) == 1)
    t.mge2 = t.blocks - t.m1
    t.crop = t.crin = t.neop = t.nein = t.psne = 0
    t.ov = t.cov = t.ovin = t.covin = 0
    t.erecop = t.erecin = t.nerecop = t.nerecin = 0
    t.brecop = t.brecin = t.nbrecop = t.nbrecin = 0
    for p in profiles:
        if p.element_class == "opener":
            t.crop += p.cr
            t.neop += p.ne
            t.ov += p.ov
            t.cov += p.cov
            if p.erec_flag:
                t.erecop += 1
            else:
                t.nerecop += 1
            if p.brec_flag:
                t.brecop += 1
            else:
                t.nbrecop += 1
        elif p.element_class == "insider":
            t.crin += p.cr
            t.nein += p.ne
            t.ovin += p.ov
            t.covin += p.cov
            if p.erec_flag:
                t.erecin += 1
            else:
                t.nerecin += 1
            if p.brec_flag:
                t.brecin += 1
            else:
                t.nbrecin += 1
        elif p.element_class == "singleton":
            t.psne += p.qne
    t.cr = t.crop + t.crin
    t.ne = t.neop + t.nein
    t.pscov = t.psne
    t.erec = t.erecop + t.erecin
    t.brec = t.brecop + t.brecin
    # Wachs-White statistics over ordered block pairs (by minimum)
    lb = ls = rb = rs = 0
    bl = pi.blocks
    for i1 in range(len(bl)):
        for i2 in range(i1 + 1, len(bl)):
            b1, b2 = bl[i1], bl[i2]  # min b1 < min b2
            lb += sum(1 for k in b1 if k > b2[0])
            ls += len(b2)
            rb += sum(1 for k in b1 if k < b2[-1])
            rs += sum(1 for k in b2 if k < b1[-1])
    t.lb = lb
    t.ls = ls
    t.lsprime = ls - (t.blocks * (t.blocks - 1)) // 2
    t.rb = rb
    t.rs = rs
    # intertwining: pairs (b,c) from distinct blocks that are adjacent in
    # the sorted union of the two blocks
    iota = 0
    for i1 in range(len(bl)):
        for i2 in range(i1 + 1, len(bl)):
            union = sorted([(e, 0) for e in bl[i1]]
                           + [(e, 1) for e in bl[i2]])
            iota += sum(1 for a, b in zip(union, union[1:])
                        if a[1] != b[1])
    t.iota = iota
    t.iota_prime = iota - (t.blocks * (t.blocks - 1)) // 2
    t.cc = len(sp_dividers(pi))
    return t


def sp_dividers(pi):
    """Indices i such that [1,i] is a union of blocks."""
    block_max = [0] * (pi.n + 1)
    for b in pi.blocks:
        for e in b:
            block_max[e] = b[-1]
    out = []
    run = 0
    for i in range(1, pi.n + 1):
        run = max(run, block_max[i])
        if run == i:
            out.append(i)
    return out


# ---------------------------------------------------------------------------
# Master weights

def sp_master_weight(pi, variant=1, profiles=None):
    """Product over elements of a/b/d/e indeterminates.

    Closers always get b[qne] and singletons e[qne].  Openers get
    a[cr,ne] (variants 1 and 4) or a[ov,cov] (variants 2 and 3); insiders
    get d[cr,ne] (variants 1 and 3) or d[ov,cov] (variants 2 and 4).
    """
    if variant not in (1, 2, 3, 4):
        raise ValueError("variant must be 1, 2, 3 or 4")
    if profiles is None:
        profiles = sp_index_profile(pi)
    op_ovcov = variant in (2, 3)
    in_ovcov = variant in (2, 4)
    exps = {}
    for p in profiles:
        cls = p.element_class
        if cls == "opener":
            v = (Indeterminate("a", p.ov, p.cov) if op_ovcov
                 else Indeterminate("a", p.cr, p.ne))
        elif cls == "closer":
            v = Indeterminate("b", p.qne)
        elif cls == "insider":
            v = (Indeterminate("d", p.ov, p.cov) if in_ovcov
                 else Indeterminate("d", p.cr, p.ne))
        else:
            v = Indeterminate("e", p.qne)
        exps[v] = exps.get(v, 0) + 1
    return Monomial(exps)


# ---------------------------------------------------------------------------
# Named weight maps.  Each maps (pi, profiles, totals) to a Monomial.

def _mono(pairs):
    exps = {}
    for fam_idx, e in pairs:
        if e:
            v = Indeterminate(*fam_idx) if isinstance(fam_idx, tuple) \
                else Indeterminate(fam_idx)
            exps[v] = exps.get(v, 0) + e
    return Monomial(exps)


def _w_unit(pi, profiles, t):
    return Monomial()


def _w_block_count(pi, profiles, t):
    return _mono([("x", t.blocks)])


def _w_three_var(pi, profiles, t):
    return _mono([("x", t.blocks), ("y", t.erec),
                  ("v", t.n - t.blocks - t.erec)])


def _six_var_pairs(t):
    return [("x1", t.m1), ("x2", t.mge2),
            ("y1", t.erecin), ("y2", t.erecop),
            ("v1", t.nerecin), ("v2", t.nerecop)]


def _w_six_var(pi, profiles, t):
    return _mono(_six_var_pairs(t))


def _w_pq_eleven(pi, profiles, t):
    return _mono(_six_var_pairs(t)
                 + [("p1", t.crin), ("p2", t.crop),
                    ("q1", t.nein), ("q2", t.neop), ("r", t.psne)])


def _w_ovcov_eleven(pi, profiles, t):
    return _mono([("x1", t.m1), ("x2", t.mge2),
                  ("y1", t.brecin), ("y2", t.brecop),
                  ("v1", t.nbrecin), ("v2", t.nbrecop),
                  ("p1", t.ovin), ("p2", t.ov),
                  ("q1", t.covin), ("q2", t.cov), ("r", t.pscov)])


def _w_mixed_three(pi, profiles, t):
    # insiders by crossings/nestings/exclusive records,
    # openers by overlaps/coverings/block records
    return _mono([("x1", t.m1), ("x2", t.mge2),
                  ("y1", t.erecin), ("y2", t.brecop),
                  ("v1", t.nerecin), ("v2", t.nbrecop),
                  ("p1", t.crin), ("p2", t.ov),
                  ("q1", t.nein), ("q2", t.cov), ("r", t.psne)])


def _w_mixed_four(pi, profiles, t):
    # openers by crossings/nestings/exclusive records,
    # insiders by overlaps/coverings/block records
    return _mono([("x1", t.m1), ("x2", t.mge2),
                  ("y1", t.brecin), ("y2", t.erecop),
                  ("v1", t.nbrecin), ("v2", t.nerecop),
                  ("p1", t.ovin), ("p2", t.crop),
                  ("q1", t.covin), ("q2", t.neop), ("r", t.psne)])


def _w_master(variant):
    def w(pi, profiles, t):
        return sp_master_weight(pi, variant, profiles)
    return w


def _w_x_lb(pi, profiles, t):
    return _mono([("x", t.blocks), ("q", t.lb)])


def _w_x_ls(pi, profiles, t):
    return _mono([("x", t.blocks), ("q", t.ls)])


def _w_x_lsprime(pi, profiles, t):
    return _mono([("x", t.blocks), ("q", t.lsprime)])


def _w_x_rb(pi, profiles, t):
    return _mono([("x", t.blocks), ("q", t.rb)])


def _w_x_rs(pi, profiles, t):
    return _mono([("x", t.blocks), ("q", t.rs)])


def _w_lb_ls(pi, profiles, t):
    return _mono([("x", t.blocks), ("a", t.lb), ("b", t.ls)])


def _w_rs_rb(pi, profiles, t):
    return _mono([("x", t.blocks), ("a", t.rs), ("b", t.rb)])


def _w_x_iota(pi, profiles, t):
    return _mono([("x", t.blocks), ("q", t.iota)])


def _w_x_iota_prime(pi, profiles, t):
    return _mono([("x", t.blocks), ("q", t.iota_prime)])


def _w_zeta_cc(pi, profiles, t):
    return _mono([("zeta", t.cc)])


SP_WEIGHTS = {
    "unit": _w_unit,
    "block-count": _w_block_count,
    "three-var": _w_three_var,
    "six-var": _w_six_var,
    "pq-eleven": _w_pq_eleven,
    "ovcov-eleven": _w_ovcov_eleven,
    "mixed-three": _w_mixed_three,
    "mixed-four": _w_mixed_four,
    "master1": _w_master(1),
    "master2": _w_master(2),
    "master3": _w_master(3),
    "master4": _w_master(4),
    "x-lb": _w_x_lb,
    "x-ls": _w_x_ls,
    "x-lsprime": _w_x_lsprime,
    "x-rb": _w_x_rb,
    "x-rs": _w_x_rs,
    "lb-ls": _w_lb_ls,
    "rs-rb": _w_rs_rb,
    "x-iota": _w_x_iota,
    "x-iota-prime": _w_x_iota_prime,
    "zeta-cc": _w_zeta_cc,
}


# ---------------------------------------------------------------------------
# Enumeration via restricted-growth words

def iter_rgs(n):
    """Restricted-growth words of length n in lexicographic order."""
    if n == 0:
        yield ()
        return
    w = [0] * n
    mx = [0] * n  # mx[i] = max(w[0..i])
    i = n - 1
    yield tuple(w)
    while True:
        # advance position i, carrying leftward
        i = n - 1
        while i > 0 and w[i] >= mx[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        w[i] += 1
        mx[i] = max(mx[i - 1], w[i])
        for j in range(i + 1, n):
            w[j] = 0
            mx[j] = mx[j - 1]
        yield tuple(w)


def setpart_from_rgs(word):
    """Partition whose block labels are the restricted-growth word."""
    blocks = {}
    for i, r in enumerate(word, start=1):
        blocks.setdefault(r, []).append(i)
    return SetPartition(blocks.values(), _trusted=True)


def iter_set_partitions(n):
    for word in iter_rgs(n):
        yield setpart_from_rgs(word)


def enumerate_sp_polynomial(n, family="all", weight="unit",
                            substitution=None, with_cc_zeta=False):
    """Exact weighted sum over a family of partitions of [n].

    `family` is "all", "indecomposable", or "blocks:k" for a fixed block
    count k.  `weight` is a registered weight-map id or a callable
    (pi, profiles, totals) -> Monomial/MultiPoly.  `substitution`, if
    given, is applied to the final polynomial.  `with_cc_zeta` multiplies
    every weight by zeta^cc.
    """
    if callable(weight):
        wfun = weight
    else:
        try:
            wfun = SP_WEIGHTS[weight]
        except KeyError:
            raise UnknownWeightMap(weight) from None
    block_count = None
    if family == "all":
        ffun = None
    elif family == "indecomposable":
        ffun = lambda pi, profiles, t: t.cc == 1
    elif isinstance(family, str) and family.startswith("blocks:"):
        block_count = int(family.split(":", 1)[1])
        ffun = lambda pi, profiles, t: t.blocks == block_count
    else:
        raise UnknownWeightMap("unknown family %r" % (family,))
    acc = {}
    zeta = Indeterminate("zeta")
    for pi in iter_set_partitions(n):
        profiles = sp_index_profile(pi)
        totals = sp_stat_totals(pi, profiles)
        if ffun is not None and not ffun(pi, profiles, totals):
            continue
        wt = wfun(pi, profiles, totals)
        if with_cc_zeta and totals.cc:
            wt = wt * Monomial({zeta: totals.cc})
        if isinstance(wt, Monomial):
            acc[wt] = acc.get(wt, 0) + 1
        else:
            for m, c in as_poly(wt).terms.items():
                acc[m] = acc.get(m, 0) + c
    acc = {m: c for m, c in acc.items() if c}
    result = MultiPoly(acc)
    if substitution:
        result = result.substitute(substitution)
    return result
