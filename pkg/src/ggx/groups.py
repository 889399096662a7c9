"""Finite groups with dense element indices.

Index 0 is always the identity.  Permutations are stored as image tuples,
dihedral elements as (flip, rotation) pairs, direct-product elements as
coordinate tuples indexed row-major.  Groups of order <= 4096 materialize
their full multiplication table; larger ones multiply on demand through an
element->index dictionary and memoize cyclic subgroups.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

import numpy as np

from ._numtheory import crt_pair, factorize, prime_divisors, valuation
from .errors import (
    BadCayleyFileError,
    BadLabelError,
    ClosureCapExceededError,
    InvalidOrderError,
    OrderCapExceededError,
    SpecSyntaxError,
    UnsupportedGroupError,
)

ORDER_CAP = 200_000
TABLE_CAP = 4096
SYM_DEGREE_CAP = 12
CLOSURE_CAP = 1_000_000


# ---------------------------------------------------------------------------
# specs


@dataclass(frozen=True)
class GroupSpec:
    """Parsed form of a group spec string such as "S7" or "C30xC30"."""

    kind: str  # cyclic | symmetric | alternating | dihedral | quaternion8 | product | cayley | perm
    n: int = 0
    factors: tuple["GroupSpec", ...] = ()
    path: str = ""

    def render(self) -> str:
        if self.kind == "cyclic":
            return f"C{self.n}"
        if self.kind == "symmetric":
            return f"S{self.n}"
        if self.kind == "alternating":
            return f"A{self.n}"
        if self.kind == "dihedral":
            return f"D{self.n}"
        if self.kind == "quaternion8":
            return "Q8"
        if self.kind == "cayley":
            return f"cayley:{self.path}"
        if self.kind == "perm":
            return f"perm:{self.path}"
        if self.kind == "product":
            return "x".join(f.render() for f in self.factors)
        raise SpecSyntaxError(f"unknown spec kind {self.kind!r}")


_TERM_RE = re.compile(r"^([CSAD])(\d+)$")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the spec grammar: terms C/S/A/D<int>, Q8, cayley:<path>,
    perm:<path>, joined by "x" for direct products.  "D<n>" is the dihedral
    group of order 2n.  File paths must not contain a literal "x"."""
    if not isinstance(text, str) or not text.strip():
        raise SpecSyntaxError("empty group spec")
    parts = text.strip().split("x")
    terms = [_parse_term(p) for p in parts]
    if len(terms) == 1:
        return terms[0]
    return GroupSpec(kind="product", factors=tuple(terms))


def _parse_term(part: str) -> GroupSpec:
    part = part.strip()
    if not part:
        raise SpecSyntaxError("empty term in group spec")
    if part == "Q8":
        return GroupSpec(kind="quaternion8", n=8)
    if part.startswith("cayley:"):
        path = part[len("cayley:") :]
        if not path:
            raise SpecSyntaxError("cayley: needs a file path")
        return GroupSpec(kind="cayley", path=path)
    if part.startswith("perm:"):
        path = part[len("perm:") :]
        if not path:
            raise SpecSyntaxError("perm: needs a file path")
        return GroupSpec(kind="perm", path=path)
    m = _TERM_RE.match(part)
    if not m:
        raise SpecSyntaxError(f"cannot parse group term {part!r}")
    letter, num = m.group(1), int(m.group(2))
    if num < 1:
        raise InvalidOrderError(f"{part!r}: order parameter must be >= 1")
    if letter == "C":
        return GroupSpec(kind="cyclic", n=num)
    if letter == "D":
        return GroupSpec(kind="dihedral", n=num)
    if letter in ("S", "A"):
        if num > SYM_DEGREE_CAP:
            raise UnsupportedGroupError(f"{part!r}: degree capped at {SYM_DEGREE_CAP}")
        return GroupSpec(kind="symmetric" if letter == "S" else "alternating", n=num)
    raise SpecSyntaxError(f"cannot parse group term {part!r}")


# ---------------------------------------------------------------------------
# the group object


@dataclass
class FiniteGroup:
    order: int
    labels: list[str]
    kind: str
    spec: GroupSpec | None = None
    table: np.ndarray | None = None
    keys: list | None = None
    key_index: dict | None = None
    degree: int = 0  # permutation degree when kind is a permutation family
    factors: list["FiniteGroup"] = field(default_factory=list)
    _mul_keys: object = None  # callable on keys for non-table groups
    _orders: np.ndarray | None = None
    _powers: dict = field(default_factory=dict)
    _label_index: dict | None = None

    def multiply(self, i: int, j: int) -> int:
        if self.table is not None:
            return int(self.table[i, j])
        key = self._mul_keys(self.keys[i], self.keys[j])
        return self.key_index[key]

    def inverse(self, i: int) -> int:
        p = self.powers(i)
        return p[-2] if len(p) >= 2 else p[-1]

    def powers(self, x: int) -> tuple[int, ...]:
        """(x, x^2, ..., x^o = identity), memoized."""
        got = self._powers.get(x)
        if got is not None:
            return got
        seq = [x]
        cur = x
        while cur != 0:
            cur = self.multiply(cur, x)
            seq.append(cur)
        out = tuple(seq)
        self._powers[x] = out
        return out

    def orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = self._compute_orders()
        return self._orders

    def _compute_orders(self) -> np.ndarray:
        n = self.order
        if self.kind == "cyclic":
            idx = np.arange(n, dtype=np.int64)
            return n // np.gcd(idx, n)
        if self.kind in ("symmetric", "alternating", "perm"):
            out = np.empty(n, dtype=np.int64)
            for i, key in enumerate(self.keys):
                out[i] = _perm_order(key)
            return out
        if self.kind == "dihedral":
            half = n // 2
            out = np.empty(n, dtype=np.int64)
            for i, (f, k) in enumerate(self.keys):
                out[i] = 2 if f else (half // math.gcd(half, k) if k else 1)
            return out
        if self.kind == "product":
            coords = self._coords_all()
            out = np.ones(n, dtype=np.int64)
            for axis, fac in enumerate(self.factors):
                out = np.lcm(out, fac.orders()[coords[:, axis]])
            return out
        out = np.empty(n, dtype=np.int64)
        for x in range(n):
            out[x] = len(self.powers(x))
        return out

    def _coords_all(self) -> np.ndarray:
        sizes = [f.order for f in self.factors]
        idx = np.arange(self.order, dtype=np.int64)
        coords = np.empty((self.order, len(sizes)), dtype=np.int64)
        for axis in range(len(sizes) - 1, -1, -1):
            coords[:, axis] = idx % sizes[axis]
            idx //= sizes[axis]
        return coords

    def label_index(self) -> dict[str, int]:
        if self._label_index is None:
            self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        return self._label_index

    def element_from_label(self, text: str) -> int:
        """Resolve an element from its label; permutation groups also accept
        cycle notation like "(1 2 3)(4 5)" and "e" or "()" for the identity."""
        got = self.label_index().get(text.strip())
        if got is not None:
            return got
        if self.kind in ("symmetric", "alternating", "perm"):
            key = _parse_cycle_notation(text, self.degree)
            idx = self.key_index.get(key) if self.key_index else None
            if idx is None:
                raise BadLabelError(f"{text!r} is not an element of this group")
            return idx
        raise BadLabelError(f"unknown element label {text!r}")

    def __repr__(self) -> str:
        name = self.spec.render() if self.spec else self.kind
        return f"FiniteGroup({name}, order={self.order})"


# ---------------------------------------------------------------------------
# permutation helpers


def _perm_mul(a: tuple, b: tuple) -> tuple:
    # apply b first, then a
    return tuple(a[bk] for bk in b)


def _perm_order(img: tuple) -> int:
    n = len(img)
    seen = [False] * n
    out = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = img[cur]
            length += 1
        out = math.lcm(out, length)
    return out


def _perm_label(img: tuple) -> str:
    n = len(img)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or img[start] == start:
            seen[start] = True
            continue
        cyc = []
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = img[cur]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "e"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycle_notation(text: str, degree: int) -> tuple:
    s = text.strip()
    if s in ("e", "()", "id"):
        return tuple(range(degree))
    stripped = re.sub(r"\s+", "", s)
    chunks = _CYCLE_RE.findall(s)
    if not chunks or re.sub(r"\s+", "", "".join(f"({c})" for c in chunks)) != stripped:
        raise BadLabelError(f"cannot parse permutation {text!r}")
    img = list(range(degree))
    used: set[int] = set()
    for chunk in chunks:
        pts = [p for p in re.split(r"[,\s]+", chunk.strip()) if p]
        try:
            zero_based = [int(p) - 1 for p in pts]
        except ValueError:
            raise BadLabelError(f"non-integer point in {text!r}") from None
        if len(zero_based) < 2:
            raise BadLabelError(f"cycle too short in {text!r}")
        for p in zero_based:
            if not (0 <= p < degree):
                raise BadLabelError(f"point {p + 1} outside degree {degree} in {text!r}")
            if p in used:
                raise BadLabelError(f"point {p + 1} repeated in {text!r}")
            used.add(p)
        for a, b in zip(zero_based, zero_based[1:] + zero_based[:1]):
            img[a] = b
    return tuple(img)


# ---------------------------------------------------------------------------
# construction


def build_group(spec: GroupSpec | str, order_cap: int = ORDER_CAP) -> FiniteGroup:
    """Build the full group for a spec, identity at index 0, deterministic
    element enumeration."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if spec.kind == "cyclic":
        return _build_cyclic(spec, order_cap)
    if spec.kind == "symmetric":
        return _build_perm_family(spec, order_cap, alternating=False)
    if spec.kind == "alternating":
        return _build_perm_family(spec, order_cap, alternating=True)
    if spec.kind == "dihedral":
        return _build_dihedral(spec, order_cap)
    if spec.kind == "quaternion8":
        return _build_q8(spec)
    if spec.kind == "product":
        return _build_product(spec, order_cap)
    if spec.kind == "cayley":
        return _build_cayley(spec, order_cap)
    if spec.kind == "perm":
        return _build_perm_file(spec, order_cap)
    raise SpecSyntaxError(f"cannot build spec kind {spec.kind!r}")


def _check_cap(order: int, cap: int, what: str) -> None:
    if order > cap:
        raise OrderCapExceededError(f"{what} has order {order}, over the cap {cap}")


def _build_cyclic(spec: GroupSpec, cap: int) -> FiniteGroup:
    n = spec.n
    _check_cap(n, cap, spec.render())
    labels = [str(i) for i in range(n)]
    table = None
    if n <= TABLE_CAP:
        idx = np.arange(n, dtype=np.int32)
        table = (idx[:, None] + idx[None, :]) % n
    g = FiniteGroup(order=n, labels=labels, kind="cyclic", spec=spec, table=table)
    if table is None:
        g.keys = list(range(n))
        g.key_index = {i: i for i in range(n)}
        g._mul_keys = lambda a, b: (a + b) % n
    return g


def _bfs_closure(identity, gens: list, mul, cap: int, what: str):
    """Deterministic closure: breadth-first layers from the identity, new
    elements of each layer indexed in sorted key order."""
    index = {identity: 0}
    elements = [identity]
    frontier = [identity]
    while frontier:
        new = set()
        for x in frontier:
            for h in gens:
                y = mul(x, h)
                if y not in index and y not in new:
                    new.add(y)
        layer = sorted(new)
        for y in layer:
            index[y] = len(elements)
            elements.append(y)
            if len(elements) > cap:
                raise OrderCapExceededError(f"{what} exceeds the {cap}-element cap")
        frontier = layer
    return elements, index


def _finish_key_group(spec, kind, elements, index, mul, labeller, degree=0) -> FiniteGroup:
    n = len(elements)
    labels = [labeller(k) for k in elements]
    g = FiniteGroup(
        order=n,
        labels=labels,
        kind=kind,
        spec=spec,
        keys=elements,
        key_index=index,
        degree=degree,
        _mul_keys=mul,
    )
    if n <= TABLE_CAP:
        table = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(elements):
            row_keys = [mul(a, b) for b in elements]
            table[i] = [index[k] for k in row_keys]
        g.table = table
    return g


def _build_perm_family(spec: GroupSpec, cap: int, alternating: bool) -> FiniteGroup:
    n = spec.n
    order = math.factorial(n) // (2 if alternating and n >= 2 else 1)
    _check_cap(order, cap, spec.render())
    identity = tuple(range(n))
    gens: list[tuple] = []
    if not alternating:
        if n >= 2:
            t = list(range(n))
            t[0], t[1] = t[1], t[0]
            gens.append(tuple(t))
        if n >= 3:
            gens.append(tuple(list(range(1, n)) + [0]))
    else:
        if n >= 3:
            c3 = list(range(n))
            c3[0], c3[1], c3[2] = c3[1], c3[2], c3[0]
            gens.append(tuple(c3))
            if n % 2 == 1:
                gens.append(tuple(list(range(1, n)) + [0]))
            elif n >= 4:
                big = list(range(n))
                big[1:] = list(range(2, n)) + [1]
                gens.append(tuple(big))
    elements, index = _bfs_closure(identity, gens, _perm_mul, cap, spec.render())
    if len(elements) != order:
        raise AssertionError(f"{spec.render()}: closure produced {len(elements)} elements")
    return _finish_key_group(
        spec, "alternating" if alternating else "symmetric", elements, index, _perm_mul, _perm_label, degree=n
    )


def _dihedral_mul_factory(n: int):
    def mul(a, b):
        f1, k1 = a
        f2, k2 = b
        return (f1 ^ f2, (k2 + k1) % n if f2 == 0 else (k2 - k1) % n)

    return mul


def _dihedral_label(key) -> str:
    f, k = key
    if f == 0:
        return "e" if k == 0 else ("r" if k == 1 else f"r{k}")
    return "s" if k == 0 else f"sr{k}"


def _build_dihedral(spec: GroupSpec, cap: int) -> FiniteGroup:
    n = spec.n
    _check_cap(2 * n, cap, spec.render())
    mul = _dihedral_mul_factory(n)
    gens = [(0, 1 % n), (1, 0)]
    elements, index = _bfs_closure((0, 0), gens, mul, cap, spec.render())
    if len(elements) != (2 * n if n >= 2 else 2):
        raise AssertionError(f"{spec.render()}: closure produced {len(elements)} elements")
    return _finish_key_group(spec, "dihedral", elements, index, mul, _dihedral_label)


_Q8_LABELS = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
# element index = 2*unit + sign with units (1, i, j, k)
_Q8_UNIT_MUL = {
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
    (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
    (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
    (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2),
}


def _build_q8(spec: GroupSpec) -> FiniteGroup:
    table = np.empty((8, 8), dtype=np.int32)
    for i in range(8):
        si, ui = i & 1, i >> 1
        for j in range(8):
            sj, uj = j & 1, j >> 1
            smul, u = _Q8_UNIT_MUL[(ui, uj)]
            s = si ^ sj ^ smul
            table[i, j] = (u << 1) | s
    return FiniteGroup(order=8, labels=list(_Q8_LABELS), kind="quaternion8", spec=spec, table=table)


def _build_product(spec: GroupSpec, cap: int) -> FiniteGroup:
    factors = [build_group(f, cap) for f in spec.factors]
    order = 1
    for f in factors:
        order *= f.order
        _check_cap(order, cap, spec.render())
    labels_parts = [f.labels for f in factors]
    sizes = [f.order for f in factors]
    strides = [1] * len(sizes)
    for i in range(len(sizes) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    labels = []
    for idx in range(order):
        rem, coord = idx, []
        for st in strides:
            coord.append(rem // st)
            rem %= st
        labels.append("(" + ",".join(labels_parts[a][c] for a, c in enumerate(coord)) + ")")
    g = FiniteGroup(order=order, labels=labels, kind="product", spec=spec, factors=factors)
    if order <= TABLE_CAP:
        g.table = _product_table(factors)
    else:
        def mul(a, b, _strides=strides, _factors=factors):
            out = 0
            for axis, st in enumerate(_strides):
                ca, cb = (a // st) % _factors[axis].order, (b // st) % _factors[axis].order
                out += _factors[axis].multiply(ca, cb) * st
            return out

        g.keys = list(range(order))
        g.key_index = {i: i for i in range(order)}
        g._mul_keys = mul
    return g


def _product_table(factors: list[FiniteGroup]) -> np.ndarray:
    table = factors[0].table.astype(np.int64)
    for f in factors[1:]:
        t2 = f.table.astype(np.int64)
        n2 = f.order
        table = (table[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(
            table.shape[0] * n2, table.shape[1] * n2
        )
    return table.astype(np.int32)


def _build_cayley(spec: GroupSpec, cap: int) -> FiniteGroup:
    try:
        with open(spec.path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadCayleyFileError(f"cannot read Cayley file {spec.path!r}: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("version") != 1:
        raise BadCayleyFileError("Cayley file must be a JSON object with version 1")
    order = obj.get("order")
    table = obj.get("table")
    labels = obj.get("labels")
    if not isinstance(order, int) or order < 1:
        raise BadCayleyFileError("bad order field")
    _check_cap(order, cap, spec.render())
    arr = np.asarray(table, dtype=np.int64) if table is not None else None
    if arr is None or arr.shape != (order, order) or arr.min() < 0 or arr.max() >= order:
        raise BadCayleyFileError("table must be an order x order matrix of element indices")
    if labels is None:
        labels = [f"g{i}" for i in range(order)]
    if len(labels) != order or not all(isinstance(x, str) for x in labels):
        raise BadCayleyFileError("labels must be one string per element")
    _validate_cayley(arr, order)
    return FiniteGroup(order=order, labels=list(labels), kind="cayley", spec=spec, table=arr.astype(np.int32))


def _validate_cayley(arr: np.ndarray, n: int) -> None:
    idx = np.arange(n)
    if not (np.array_equal(arr[0], idx) and np.array_equal(arr[:, 0], idx)):
        raise BadCayleyFileError("index 0 must be a two-sided identity")
    for i in range(n):
        if len(np.unique(arr[i])) != n or len(np.unique(arr[:, i])) != n:
            raise BadCayleyFileError(f"row/column {i} is not a permutation")
        if not (arr[i] == 0).any():
            raise BadCayleyFileError(f"element {i} has no inverse")
    rng = np.random.default_rng(0)
    if n <= 256:
        a = np.repeat(idx, n)
        b = np.tile(idx, n)
        for c in range(n):
            if not np.array_equal(arr[arr[a, b], c], arr[a, arr[b, c]]):
                raise BadCayleyFileError("multiplication is not associative")
    else:
        a, b, c = (rng.integers(0, n, 100_000) for _ in range(3))
        if not np.array_equal(arr[arr[a, b], c], arr[a, arr[b, c]]):
            raise BadCayleyFileError("multiplication is not associative")


def _build_perm_file(spec: GroupSpec, cap: int) -> FiniteGroup:
    try:
        with open(spec.path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadCayleyFileError(f"cannot read generator file {spec.path!r}: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("version") != 1:
        raise BadCayleyFileError("generator file must be a JSON object with version 1")
    degree = obj.get("degree")
    gens_raw = obj.get("generators")
    if not isinstance(degree, int) or degree < 1 or not isinstance(gens_raw, list):
        raise BadCayleyFileError("generator file needs a degree and a generator list")
    gens = []
    for graw in gens_raw:
        img = tuple(int(v) for v in graw)
        if sorted(img) != list(range(degree)):
            raise BadCayleyFileError(f"{graw!r} is not a permutation of 0..{degree - 1}")
        gens.append(img)
    identity = tuple(range(degree))
    elements, index = _bfs_closure(identity, gens, _perm_mul, cap, spec.render())
    return _finish_key_group(spec, "perm", elements, index, _perm_mul, _perm_label, degree=degree)


# ---------------------------------------------------------------------------
# element-level operations


def element_order(g: FiniteGroup, x: int) -> int:
    return int(g.orders()[x])


def cyclic_subgroup(g: FiniteGroup, x: int) -> list[int]:
    """Sorted vertex set of <x>."""
    return sorted(g.powers(x))


def element_power(g: FiniteGroup, x: int, m: int) -> int:
    p = g.powers(x)
    m %= len(p)
    return 0 if m == 0 else p[m - 1]


def is_cyclic_pair(g: FiniteGroup, x: int, y: int, closure_cap: int = CLOSURE_CAP) -> bool:
    """True iff x and y lie in a common cyclic subgroup, i.e. the closure
    <x, y> contains an element whose order equals the closure size."""
    if x == y:
        return True
    if g.multiply(x, y) != g.multiply(y, x):
        return False
    px, py = g.powers(x), g.powers(y)
    count = len(px) * len(py)
    if count > closure_cap:
        raise ClosureCapExceededError(
            f"closure bound {count} exceeds cap {closure_cap}; raise closure_cap if intended"
        )
    orders = g.orders()
    if g.table is not None:
        members = np.unique(g.table[np.ix_(np.array(px), np.array(py))])
        return bool((orders[members] == len(members)).any())
    members_set = {g.multiply(a, b) for a in px for b in py}
    size = len(members_set)
    return any(int(orders[m]) == size for m in members_set)


def p_elements(g: FiniteGroup, p: int) -> list[int]:
    """All x whose order is a power of p, identity included."""
    orders = g.orders()
    out = []
    for x in range(g.order):
        o = int(orders[x])
        while o % p == 0:
            o //= p
        if o == 1:
            out.append(x)
    return out


@dataclass(frozen=True)
class SylowEntry:
    prime: int
    exponent: int
    unique: bool
    cyclic: bool


@dataclass(frozen=True)
class SylowReport:
    order: int
    entries: tuple[SylowEntry, ...]

    def entry(self, p: int) -> SylowEntry:
        for e in self.entries:
            if e.prime == p:
                return e
        raise KeyError(p)


def sylow_report(g: FiniteGroup) -> SylowReport:
    """Uniqueness and cyclicity of the Sylow p-subgroup for each prime p.

    Uniqueness holds iff the p-elements form a full p-power-sized,
    product-closed set; cyclicity iff some element has order p^a.
    """
    fact = factorize(g.order)
    orders = g.orders()
    entries = []
    for p in sorted(fact):
        a = fact[p]
        gp = p_elements(g, p)
        unique = len(gp) == p**a and _product_closed(g, gp)
        cyclic = bool((orders[np.array(gp)] == p**a).any())
        entries.append(SylowEntry(prime=p, exponent=a, unique=unique, cyclic=cyclic))
    return SylowReport(order=g.order, entries=tuple(entries))


def _product_closed(g: FiniteGroup, members: list[int]) -> bool:
    mset = set(members)
    if g.table is not None:
        arr = np.array(members)
        prods = g.table[np.ix_(arr, arr)]
        return bool(np.isin(prods, arr).all())
    return all(g.multiply(a, b) in mset for a in members for b in members)


def prime_power_decomposition(g: FiniteGroup, x: int) -> tuple[int, ...]:
    """Split x into commuting prime-power parts, one slot per prime divisor
    of |G| in increasing order; slot i holds the p_i-part of <x>."""
    primes = prime_divisors(g.order)
    o = element_order(g, x)
    parts = []
    for p in primes:
        a = valuation(o, p)
        q = p**a
        if q == 1:
            parts.append(0)
            continue
        rest = o // q
        m = 1 if rest == 1 else crt_pair(1, q, 0, rest)
        parts.append(element_power(g, x, m))
    return tuple(parts)
