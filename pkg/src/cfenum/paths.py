"""Labeled colored Motzkin paths, possibility functions, direct weighted
path summation, and the six bijections between permutations / set
partitions and labeled paths, with their inverses.

Steps are Rise ("R"), Fall ("F") and Level ("L"); level steps carry a
positive color.  Labels are either a single positive integer per step or
a pair (for doubly labeled paths); a possibility function gives, for each
step kind / color, the label bound as a function of the starting height.
"""

import json

from .permstats import Permutation
from .setpartstats import SetPartition

RISE = "R"
FALL = "F"
LEVEL = "L"


class TypeMismatch(TypeError):
    """The object type does not match the requested bijection."""


class InvalidPath(ValueError):
    """The path is not a valid labeled Motzkin path for the bijection."""


class ColoredStep:
    """A single path step; color is meaningful for level steps only."""

    __slots__ = ("kind", "color")

    def __init__(self, kind, color=1):
        if kind not in (RISE, FALL, LEVEL):
            raise ValueError("kind must be one of R, F, L")
        if color < 1:
            raise ValueError("color must be a positive integer")
        self.kind = kind
        self.color = color if kind == LEVEL else 1

    def delta(self):
        return {RISE: 1, FALL: -1, LEVEL: 0}[self.kind]

    def __eq__(self, other):
        return self.kind == other.kind and self.color == other.color

    def __hash__(self):
        return hash((self.kind, self.color))

    def __repr__(self):
        if self.kind == LEVEL:
            return "Level(%d)" % self.color
        return "Rise" if self.kind == RISE else "Fall"


class LabeledMotzkinPath:
    """A sequence of colored steps with one label (or a label pair) each."""

    __slots__ = ("steps", "labels", "_heights")

    def __init__(self, steps, labels):
        steps = tuple(steps)
        labels = tuple(tuple(l) if isinstance(l, (tuple, list)) else (l,)
                       for l in labels)
        if len(steps) != len(labels):
            raise ValueError("need one label per step")
        self.steps = steps
        self.labels = labels
        self._heights = None

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        return self.steps == other.steps and self.labels == other.labels

    def __hash__(self):
        return hash((self.steps, self.labels))

    def heights(self):
        """Prefix heights h_0 .. h_n."""
        if self._heights is None:
            h = [0]
            for s in self.steps:
                h.append(h[-1] + s.delta())
            self._heights = tuple(h)
        return self._heights

    def is_motzkin(self):
        h = self.heights()
        return h[-1] == 0 and min(h) >= 0

    def __repr__(self):
        return "LabeledMotzkinPath(%r, %r)" % (list(self.steps),
                                               list(self.labels))


def path_heights(p):
    return p.heights()


class PossibilityFunction:
    """Label bounds per step kind.

    `rise` and `fall` are functions height -> bound; `levels` is a
    sequence of such functions, one per level-step color.  For doubly
    labeled paths each function returns a pair of bounds.  A bound of 0
    forbids the step at that height.
    """

    __slots__ = ("rise", "fall", "levels")

    def __init__(self, rise, fall, levels):
        self.rise = rise
        self.fall = fall
        self.levels = tuple(levels)

    def colors(self):
        return len(self.levels)

    def bound(self, step, height):
        if step.kind == RISE:
            return self.rise(height)
        if step.kind == FALL:
            return self.fall(height)
        if step.color > len(self.levels):
            return 0
        return self.levels[step.color - 1](height)


def _bound_tuple(b):
    return tuple(b) if isinstance(b, (tuple, list)) else (b,)


def path_validate(p, pf):
    """True iff p is a Motzkin path and every label is within bounds."""
    h = p.heights()
    if h[-1] != 0 or min(h) < 0:
        return False
    for i, (step, label) in enumerate(zip(p.steps, p.labels)):
        bounds = _bound_tuple(pf.bound(step, h[i]))
        if len(label) != len(bounds):
            return False
        for l, b in zip(label, bounds):
            if not 1 <= l <= b:
                return False
    return True


def weighted_path_sum(pf, step_weights, n):
    """Sum of step-weight products over all valid labeled paths of
    length n starting and ending at height 0.

    `step_weights` maps (kind, color, height, label) to a weight; the
    label is an int for singly labeled bounds and a tuple for doubly
    labeled ones.  Equals the t^n coefficient of the associated
    J-fraction.
    """
    from itertools import product as iproduct
    from .mpoly import MultiPoly

    def step_sum(kind, color, height):
        """Sum of weights over all labels for one step."""
        step = ColoredStep(kind, color)
        bounds = _bound_tuple(pf.bound(step, height))
        if any(b < 1 for b in bounds):
            return None
        total = MultiPoly.zero()
        for label in iproduct(*(range(1, b + 1) for b in bounds)):
            arg = label[0] if len(label) == 1 else label
            total = total + step_weights(kind, color, height, arg)
        return total

    cache = {}
    ncolors = pf.colors()

    def rest(i, h):
        """Weighted sum over suffixes of length n-i starting at height h."""
        if n - i < h:
            return MultiPoly.zero()
        if i == n:
            return MultiPoly.one() if h == 0 else MultiPoly.zero()
        key = (i, h)
        hit = cache.get(key)
        if hit is not None:
            return hit
        total = MultiPoly.zero()
        w = step_sum(RISE, 1, h)
        if w is not None:
            total = total + w * rest(i + 1, h + 1)
        if h > 0:
            w = step_sum(FALL, 1, h)
            if w is not None:
                total = total + w * rest(i + 1, h - 1)
        for c in range(1, ncolors + 1):
            w = step_sum(LEVEL, c, h)
            if w is not None:
                total = total + w * rest(i + 1, h)
        cache[key] = total
        return total

    return rest(0, 0)


# ---------------------------------------------------------------------------
# Possibility functions of the six bijections

PF_FZ = PossibilityFunction(
    rise=lambda k: k + 1,
    fall=lambda k: k,
    levels=(lambda k: k, lambda k: k, lambda k: 1))

PF_BIANE = PossibilityFunction(
    rise=lambda k: (1, 1),
    fall=lambda k: (k, k),
    levels=(lambda k: (1, k), lambda k: (k, 1), lambda k: (1, 1)))

PF_SETPART = PossibilityFunction(
    rise=lambda k: 1,
    fall=lambda k: k,
    levels=(lambda k: k, lambda k: 1))

_PERM_BIJECTIONS = ("FZ", "Biane")
_SP_BIJECTIONS = ("KZ", "Flajolet", "Hybrid3", "Hybrid4")

BIJECTION_PFS = {
    "FZ": PF_FZ,
    "Biane": PF_BIANE,
    "KZ": PF_SETPART,
    "Flajolet": PF_SETPART,
    "Hybrid3": PF_SETPART,
    "Hybrid4": PF_SETPART,
}


# ---------------------------------------------------------------------------
# Permutation bijections

def _perm_steps(sigma):
    """3-colored Motzkin steps: cycle valley -> rise, cycle peak -> fall,
    cycle double fall -> level 1, cycle double rise -> level 2,
    fixed point -> level 3."""
    steps = []
    for i in range(1, sigma.n + 1):
        si = sigma(i)
        ti = sigma.inverse_at(i)
        if si > i and ti > i:
            steps.append(ColoredStep(RISE))
        elif si < i and ti < i:
            steps.append(ColoredStep(FALL))
        elif si < i:
            steps.append(ColoredStep(LEVEL, 1))
        elif si > i:
            steps.append(ColoredStep(LEVEL, 2))
        else:
            steps.append(ColoredStep(LEVEL, 3))
    return steps


def _encode_fz(sigma):
    n = sigma.n
    w = sigma.oneline
    labels = []
    for i in range(1, n + 1):
        si = w[i - 1]
        if si > i:
            xi = 1 + sum(1 for j in range(1, i) if w[j - 1] > si)
        elif si < i:
            xi = 1 + sum(1 for j in range(i + 1, n + 1) if w[j - 1] < si)
        else:
            xi = 1
        labels.append(xi)
    return LabeledMotzkinPath(_perm_steps(sigma), labels)


def _decode_fz(p):
    n = len(p)
    if not path_validate(p, PF_FZ):
        raise InvalidPath("not a valid path for the FZ possibility function")
    # classify indices from the steps
    kinds = []
    for s in p.steps:
        if s.kind == RISE:
            kinds.append("cval")
        elif s.kind == FALL:
            kinds.append("cpeak")
        else:
            kinds.append(("cdfall", "cdrise", "fix")[s.color - 1])
    F = [i for i in range(1, n + 1) if kinds[i - 1] in ("cval", "cdrise")]
    Fp = [i for i in range(1, n + 1) if kinds[i - 1] in ("cdrise", "cpeak")]
    G = [i for i in range(1, n + 1) if kinds[i - 1] in ("cpeak", "cdfall")]
    Gp = [i for i in range(1, n + 1) if kinds[i - 1] in ("cval", "cdfall")]
    out = [0] * (n + 1)
    for i in range(1, n + 1):
        if kinds[i - 1] == "fix":
            out[i] = i
    # sigma on F from the left-to-right inversion table p_a = xi - 1:
    # reconstruct right to left, x_a = (p_a+1)-th largest remaining element
    avail = sorted(Fp)
    for idx in range(len(F) - 1, -1, -1):
        pa = p.labels[F[idx] - 1][0] - 1
        if pa >= len(avail):
            raise InvalidPath("label out of range at step %d" % F[idx])
        out[F[idx]] = avail.pop(len(avail) - 1 - pa)
    # sigma on G from the right-to-left inversion table:
    # reconstruct left to right, x_a = (p_a+1)-th smallest remaining element
    avail = sorted(Gp)
    for idx in range(len(G)):
        pa = p.labels[G[idx] - 1][0] - 1
        if pa >= len(avail):
            raise InvalidPath("label out of range at step %d" % G[idx])
        out[G[idx]] = avail.pop(pa)
    return Permutation(out[1:])


def _encode_biane(sigma):
    n = sigma.n
    w = sigma.oneline
    labels = []
    for i in range(1, n + 1):
        si = w[i - 1]
        ti = sigma.inverse_at(i)
        if si > i and ti > i:  # cval
            labels.append((1, 1))
        elif si == i:
            labels.append((1, 1))
        else:
            if ti < i:  # cdrise or cpeak: first label
                xi1 = 1 + sum(1 for k in range(1, ti) if w[k - 1] > i)
            else:
                xi1 = 1
            if si < i:  # cdfall or cpeak: second label
                xi2 = 1 + sum(1 for k in range(i + 1, n + 1) if w[k - 1] < si)
            else:
                xi2 = 1
            labels.append((xi1, xi2))
    return LabeledMotzkinPath(_perm_steps(sigma), labels)


def _decode_biane(p):
    n = len(p)
    if not path_validate(p, PF_BIANE):
        raise InvalidPath("not a valid path for the Biane possibility "
                          "function")
    # top[r] = r-th dot with no outgoing arrow yet;
    # bot[r] = r-th dot with no incoming arrow yet
    top = []
    bot = []
    out = [0] * (n + 1)
    for i in range(1, n + 1):
        s = p.steps[i - 1]
        l1, l2 = p.labels[i - 1]
        if s.kind == RISE:
            top.append(i)
            bot.append(i)
        elif s.kind == FALL:
            # arrows i -> (l2-th free bottom dot) and (l1-th free top) -> i
            out[i] = bot.pop(l2 - 1)
            out[top.pop(l1 - 1)] = i
        elif s.color == 1:
            # cdfall: arrow i -> (l2-th free bottom dot)
            out[i] = bot.pop(l2 - 1)
            bot.append(i)
            bot.sort()
        elif s.color == 2:
            # cdrise: arrow (l1-th free top dot) -> i
            out[top.pop(l1 - 1)] = i
            top.append(i)
            top.sort()
        else:
            out[i] = i
    return Permutation(out[1:])


# ---------------------------------------------------------------------------
# Set-partition bijections

def _sp_steps(pi):
    """2-colored Motzkin steps: opener -> rise, closer -> fall,
    insider -> level 1, singleton -> level 2."""
    kinds = {}
    for b in pi.blocks:
        if len(b) == 1:
            kinds[b[0]] = ("L", 2)
        else:
            kinds[b[0]] = ("R", 1)
            kinds[b[-1]] = ("F", 1)
            for j in b[1:-1]:
                kinds[j] = ("L", 1)
    return [ColoredStep(*kinds[i]) for i in range(1, pi.n + 1)]


def _sp_labels(pi, order_insider, order_closer):
    """Labels for the KZ/Flajolet/hybrid family.

    `order_insider` / `order_closer` select the ordering key of the open
    blocks: "last" (by most recent element, as in KZ) or "first" (by
    opener, as in Flajolet)."""
    n = pi.n
    block_of = {}
    for bi, b in enumerate(pi.blocks):
        for j in b:
            block_of[j] = bi
    open_blocks = []  # list of [opener, last-element-so-far, block index]
    labels = []
    for i in range(1, n + 1):
        b = pi.blocks[block_of[i]]
        if len(b) == 1 or i == b[0]:
            labels.append(1)
            if len(b) > 1:
                open_blocks.append([b[0], b[0], block_of[i]])
        else:
            mode = order_closer if i == b[-1] else order_insider
            key = 1 if mode == "last" else 0
            order = sorted(range(len(open_blocks)),
                           key=lambda r: open_blocks[r][key])
            pos = next(j for j, r in enumerate(order)
                       if open_blocks[r][2] == block_of[i])
            labels.append(pos + 1)
            if i == b[-1]:
                open_blocks = [ob for ob in open_blocks
                               if ob[2] != block_of[i]]
            else:
                open_blocks[order[pos]][1] = i
    return labels


def _decode_sp(p, order_insider, order_closer):
    n = len(p)
    if not path_validate(p, PF_SETPART):
        raise InvalidPath("not a valid path for the set-partition "
                          "possibility function")
    open_blocks = []  # growing blocks, as lists
    done = []
    for i in range(1, n + 1):
        s = p.steps[i - 1]
        xi = p.labels[i - 1][0]
        if s.kind == RISE:
            open_blocks.append([i])
        elif s.kind == LEVEL and s.color == 2:
            done.append([i])
        else:
            mode = order_closer if s.kind == FALL else order_insider
            key = (lambda b: b[-1]) if mode == "last" else (lambda b: b[0])
            order = sorted(range(len(open_blocks)),
                           key=lambda r: key(open_blocks[r]))
            r = order[xi - 1]
            open_blocks[r].append(i)
            if s.kind == FALL:
                done.append(open_blocks.pop(r))
    return SetPartition(done)


_SP_MODES = {
    "KZ": ("last", "last"),
    "Flajolet": ("first", "first"),
    "Hybrid3": ("last", "first"),
    "Hybrid4": ("first", "last"),
}


# ---------------------------------------------------------------------------
# Reversed statistics (distinguished index in third position)

def sp_reversed_index_stats(pi):
    """Per-index reversed crossing/nesting/overlap/covering statistics.

    Returns a dict index -> dict with keys crt, net, ovt, covt where
    crt(k) counts quadruplets i<j<k<l with arcs (i,k),(j,l);
    net(k) counts i<j<k<l with arcs (i,l),(j,k);
    ovt(k) counts blocks B' with min B(k) < min B' < k < max B';
    covt(k) counts blocks B' with min B' < min B(k) < k < max B'.
    """
    arcs = pi.arcs
    block_of = {}
    for b in pi.blocks:
        for j in b:
            block_of[j] = b
    out = {}
    for k in range(1, pi.n + 1):
        crt = net = 0
        for (i, kk) in arcs:
            if kk != k:
                continue
            for (j, l) in arcs:
                if i < j < k < l:
                    crt += 1
        for (j, kk) in arcs:
            if kk != k:
                continue
            for (i, l) in arcs:
                if i < j and l > k:
                    net += 1
        b = block_of[k]
        ovt = covt = 0
        for bp in pi.blocks:
            if bp is b or len(bp) == 0:
                continue
            if bp[0] < k < bp[-1]:
                if b[0] < bp[0]:
                    ovt += 1
                else:
                    covt += 1
        out[k] = {"crt": crt, "net": net, "ovt": ovt, "covt": covt}
    return out


# ---------------------------------------------------------------------------
# Public encode / decode

def encode(obj, bijection):
    """Map a permutation or set partition to its labeled Motzkin path."""
    if bijection in _PERM_BIJECTIONS:
        if not isinstance(obj, Permutation):
            raise TypeMismatch("%s expects a permutation" % bijection)
        return _encode_fz(obj) if bijection == "FZ" else _encode_biane(obj)
    if bijection in _SP_BIJECTIONS:
        if not isinstance(obj, SetPartition):
            raise TypeMismatch("%s expects a set partition" % bijection)
        ins, clo = _SP_MODES[bijection]
        return LabeledMotzkinPath(_sp_steps(obj), _sp_labels(obj, ins, clo))
    raise TypeMismatch("unknown bijection %r" % (bijection,))


def decode(p, bijection):
    """Inverse of encode; raises InvalidPath for paths outside the image."""
    if bijection == "FZ":
        return _decode_fz(p)
    if bijection == "Biane":
        return _decode_biane(p)
    if bijection in _SP_BIJECTIONS:
        ins, clo = _SP_MODES[bijection]
        return _decode_sp(p, ins, clo)
    raise TypeMismatch("unknown bijection %r" % (bijection,))


# ---------------------------------------------------------------------------
# JSON form: {"steps":[{"kind":"L","color":3,"label":[1]} ...]}

def path_to_json_obj(p):
    return {"steps": [
        {"kind": s.kind, "color": s.color, "label": list(l)}
        for s, l in zip(p.steps, p.labels)]}


def path_to_json(p):
    return json.dumps(path_to_json_obj(p))


def path_from_json_obj(obj):
    steps = []
    labels = []
    for d in obj["steps"]:
        steps.append(ColoredStep(d["kind"], d.get("color", 1)))
        labels.append(tuple(d["label"]))
    return LabeledMotzkinPath(steps, labels)


def path_from_json(text):
    return path_from_json_obj(json.loads(text))
