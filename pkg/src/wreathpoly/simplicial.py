"""Abstract simplicial complexes with a total vertex order.

Covers the constructions used throughout: the trivial triangulation of a
simplex, its barycentric subdivision (chains of nonempty subsets), r-fold
edgewise subdivisions, the sphere construction glueing a triangulated simplex
to an antipodal simplex, plus f-vectors, h- and local h-polynomials, flagness
and permutation actions with their fixed subcomplexes.

Vertex labels are canonical tuples:
    ('base', i)              simplex vertex v_i
    ('chain', (i1, .., ik))  barycentric vertex for the subset {i1 < .. < ik}
    ('mult', ((lbl, m), ..)) edgewise vertex: multiplicity m on each support
                             vertex lbl of the subdivided complex, sum = r
    ('anti', i)              antipodal vertex u_i
The global order is by kind, then (cardinality, lex) for chains, then lex on
the multiplicity items; it restricts to the order every construction needs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .polyring import DomainError, IntPolynomial, ONE_MINUS_T

Label = tuple

_KIND_ORDER = {"base": 0, "chain": 1, "mult": 2, "anti": 3}


def vertex_key(label: Label):
    kind = label[0]
    if kind in ("base", "anti"):
        return (_KIND_ORDER[kind], label[1])
    if kind == "chain":
        s = label[1]
        return (_KIND_ORDER[kind], len(s), s)
    if kind == "mult":
        return (_KIND_ORDER[kind], tuple((vertex_key(l), m) for l, m in label[1]))
    raise DomainError(f"unknown vertex kind {kind!r}")


def label_str(label: Label) -> str:
    kind = label[0]
    if kind == "base":
        return f"v{label[1]}"
    if kind == "anti":
        return f"u{label[1]}"
    if kind == "chain":
        return "{" + ",".join(map(str, label[1])) + "}"
    if kind == "mult":
        return "[" + ";".join(f"{label_str(l)}:{m}" for l, m in label[1]) + "]"
    raise DomainError(f"unknown vertex kind {kind!r}")


class SimplicialComplex:
    """Faces stored implicitly as the downward closure of a facet antichain."""

    def __init__(self, facets: Iterable[Iterable[Label]]):
        fs = {frozenset(f) for f in facets}
        self.facets = frozenset(f for f in fs if not any(f < g for g in fs))
        verts = set().union(*self.facets) if self.facets else set()
        self.vertices = tuple(sorted(verts, key=vertex_key))
        self._faces: set[frozenset] | None = None

    def faces(self) -> set[frozenset]:
        """All faces including the empty face."""
        if self._faces is None:
            out: set[frozenset] = {frozenset()}
            for f in self.facets:
                vs = tuple(f)
                for k in range(1, len(vs) + 1):
                    out.update(map(frozenset, itertools.combinations(vs, k)))
            self._faces = out
        return self._faces

    def has_face(self, face: Iterable[Label]) -> bool:
        fs = frozenset(face)
        return any(fs <= f for f in self.facets)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) <= 1

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim)."""
        counts = [0] * (self.dim + 2)
        for f in self.faces():
            counts[len(f)] += 1
        return tuple(counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def to_json(self) -> dict:
        return {
            "vertices": [label_str(v) for v in self.vertices],
            "facets": sorted(
                sorted(label_str(v) for v in f) for f in self.facets
            ),
        }

    def to_text(self) -> str:
        lines = sorted(" ".join(sorted(label_str(v) for v in f)) for f in self.facets)
        return "\n".join(lines)


@dataclass(frozen=True)
class TriangulatedSimplex:
    """A triangulation of the simplex on a base set, with structural
    restriction to faces of that simplex."""

    base: tuple[int, ...]
    complex: SimplicialComplex
    restrict_fn: Callable[[tuple[int, ...]], "TriangulatedSimplex"]

    def restrict(self, face: Iterable[int]) -> "TriangulatedSimplex":
        f = tuple(sorted(face))
        if not set(f) <= set(self.base):
            raise DomainError(f"{f} is not a face of the base simplex {self.base}")
        return self.restrict_fn(f)


def simplex(n_or_base) -> TriangulatedSimplex:
    """The trivial triangulation of the simplex on [n] (or a given base)."""
    base = tuple(range(1, n_or_base + 1)) if isinstance(n_or_base, int) else tuple(
        sorted(n_or_base)
    )
    facet = [("base", i) for i in base]
    sc = SimplicialComplex([facet])
    return TriangulatedSimplex(base, sc, lambda f: simplex(f))


def barycentric_subdivision(n_or_base) -> TriangulatedSimplex:
    """Chains of nonempty subsets of the base; facets are maximal chains."""
    base = tuple(range(1, n_or_base + 1)) if isinstance(n_or_base, int) else tuple(
        sorted(n_or_base)
    )
    facets = []
    for perm in itertools.permutations(base):
        chain = [("chain", tuple(sorted(perm[: k + 1]))) for k in range(len(perm))]
        facets.append(chain)
    if not base:
        facets = [[]]
    sc = SimplicialComplex(facets)
    return TriangulatedSimplex(base, sc, lambda f: barycentric_subdivision(f))


def _iota(fmap: dict, ordered: tuple) -> tuple:
    total = 0
    out = []
    for v in ordered:
        total += fmap.get(v, 0)
        out.append(total)
    return tuple(out)


def _step_compatible(a: tuple, b: tuple) -> bool:
    diffs = {x - y for x, y in zip(a, b)}
    return diffs <= {0, 1} or diffs <= {0, -1}


def edgewise_subdivision(sc: SimplicialComplex, r: int) -> SimplicialComplex:
    """The r-fold edgewise subdivision with respect to the global vertex order."""
    if r < 1:
        raise DomainError("edgewise subdivision requires r >= 1")
    ordered = sc.vertices
    new_facets: set[frozenset] = set()
    for facet in sc.facets:
        fverts = sorted(facet, key=vertex_key)
        d = len(fverts)
        # all multiplicity maps supported inside this facet
        cands = []
        for mults in _compositions(r, d):
            fmap = {v: m for v, m in zip(fverts, mults) if m}
            label = ("mult", tuple(sorted(fmap.items(), key=lambda x: vertex_key(x[0]))))
            cands.append((label, _iota(fmap, ordered)))
        if d == 0:
            new_facets.add(frozenset())
            continue
        for combo in itertools.combinations(range(len(cands)), d):
            if all(
                _step_compatible(cands[i][1], cands[j][1])
                for i, j in itertools.combinations(combo, 2)
            ):
                new_facets.add(frozenset(cands[i][0] for i in combo))
    # drop candidates contained in a larger one (only possible for non-pure input)
    maximal = {f for f in new_facets if not any(f < g for g in new_facets)}
    return SimplicialComplex(maximal)


def _compositions(r: int, d: int):
    """Weak compositions of r into d parts."""
    if d == 0:
        if r == 0:
            yield ()
        return
    for head in range(r + 1):
        for tail in _compositions(r - head, d - 1):
            yield (head,) + tail


def gamma_complex(n_or_base, r: int) -> TriangulatedSimplex:
    """r-fold edgewise subdivision of the barycentric subdivision of a simplex."""
    bary = barycentric_subdivision(n_or_base)
    sc = edgewise_subdivision(bary.complex, r)
    if not bary.base:
        sc = SimplicialComplex([[]])
    return TriangulatedSimplex(bary.base, sc, lambda f: gamma_complex(f, r))


def restriction(tri: TriangulatedSimplex, face: Iterable[int]) -> SimplicialComplex:
    return tri.restrict(face).complex


def delta_of(tri: TriangulatedSimplex) -> SimplicialComplex:
    """Sphere triangulation: faces E u G with E inside the antipodal simplex
    and G carried by the complementary face of the base simplex."""
    base = tri.base
    facets = []
    for k in range(len(base) + 1):
        for comp in itertools.combinations(base, k):
            anti = [("anti", i) for i in base if i not in comp]
            sub = tri.restrict(comp).complex
            for g in sub.facets:
                facets.append(list(g) + anti)
    return SimplicialComplex(facets)


def f_vector(sc: SimplicialComplex) -> tuple[int, ...]:
    return sc.f_vector()


def h_polynomial(sc: SimplicialComplex, n: int | None = None) -> IntPolynomial:
    """h(D, t) = sum_i f_(i-1) t^i (1-t)^(n-i), n = dim + 1 by default."""
    if not sc.is_pure():
        raise DomainError("h-polynomial requires a pure complex")
    fv = sc.f_vector()
    if n is None:
        n = sc.dim + 1
    out = IntPolynomial.zero()
    for i, f in enumerate(fv):
        out = out + (f * ONE_MINUS_T ** (n - i)).shift(i)
    return out


def local_h(tri: TriangulatedSimplex) -> IntPolynomial:
    """Alternating sum of restriction h-polynomials over faces of the base."""
    n = len(tri.base)
    out = IntPolynomial.zero()
    for k in range(n + 1):
        sign = -1 if (n - k) % 2 else 1
        for face in itertools.combinations(tri.base, k):
            out = out + sign * h_polynomial(tri.restrict(face).complex, k)
    return out


def is_flag(sc: SimplicialComplex) -> bool:
    """Every clique of the 1-skeleton is a face."""
    verts = sc.vertices
    adj = {v: set() for v in verts}
    for f in sc.facets:
        for u, v in itertools.combinations(f, 2):
            adj[u].add(v)
            adj[v].add(u)
    order = {v: i for i, v in enumerate(verts)}
    # grow cliques along the vertex order; check each against the face list
    stack = [((v,), {u for u in adj[v] if order[u] > order[v]}) for v in verts]
    while stack:
        clique, ext = stack.pop()
        if len(clique) >= 3 and not sc.has_face(clique):
            return False
        for u in list(ext):
            stack.append((clique + (u,), {x for x in ext if x in adj[u] and order[x] > order[u]}))
    return True


@dataclass(frozen=True)
class VertexAction:
    """Vertex bijection induced by a permutation of the base indices."""

    mapping: tuple[tuple[Label, Label], ...]

    def as_dict(self) -> dict:
        return dict(self.mapping)


def _relabel(label: Label, w: dict[int, int]) -> Label:
    kind = label[0]
    if kind in ("base", "anti"):
        return (kind, w[label[1]])
    if kind == "chain":
        return ("chain", tuple(sorted(w[i] for i in label[1])))
    if kind == "mult":
        items = [(_relabel(l, w), m) for l, m in label[1]]
        return ("mult", tuple(sorted(items, key=lambda x: vertex_key(x[0]))))
    raise DomainError(f"unknown vertex kind {kind!r}")


def act(perm: Iterable[int], sc: SimplicialComplex) -> VertexAction:
    """Action of the permutation (one-line, perm[i-1] = image of i) on the
    vertex labels; verified to map facets to facets."""
    w = {i + 1: v for i, v in enumerate(perm)}
    mapping = {v: _relabel(v, w) for v in sc.vertices}
    if set(mapping.values()) != set(sc.vertices):
        raise DomainError("permutation does not act on the vertex set")
    for f in sc.facets:
        if frozenset(mapping[v] for v in f) not in sc.facets:
            raise DomainError("induced map does not send facets to facets")
    return VertexAction(tuple(sorted(mapping.items(), key=lambda x: vertex_key(x[0]))))


def fixed_subcomplex(sc: SimplicialComplex, action: VertexAction) -> SimplicialComplex:
    """Induced subcomplex on the fixed vertices; requires a proper action
    (every setwise-fixed face must be fixed pointwise)."""
    m = action.as_dict()
    fixed = {v for v in sc.vertices if m[v] == v}
    for face in sc.faces():
        if frozenset(m[v] for v in face) == face and not face <= fixed:
            raise DomainError(
                "action is not proper: face fixed setwise but not pointwise"
            )
    cands = {f & fixed for f in sc.facets}
    maximal = [f for f in cands if not any(f < g for g in cands)]
    return SimplicialComplex(maximal)


def ridges_in_two_facets(sc: SimplicialComplex) -> bool:
    """Pseudomanifold check: every codimension-1 face lies in exactly 2 facets."""
    counts: dict[frozenset, int] = {}
    for f in sc.facets:
        for v in f:
            r = f - {v}
            counts[r] = counts.get(r, 0) + 1
    return all(c == 2 for c in counts.values())


def euler_characteristic(sc: SimplicialComplex) -> int:
    fv = sc.f_vector()
    return sum((-1) ** i * f for i, f in enumerate(fv[1:]))
