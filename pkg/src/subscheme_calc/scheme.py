"""Schemes glued from affine patches along principal opens, and morphisms.

A patch algebra localized at ``f`` is ``A[s]/(s*f - 1)`` with the inverse
variable ``s`` placed first, so contraction back to ``A`` eliminates the
first variable. A glue record for patches ``(i, j)`` carries a ring
isomorphism ``theta: A_i[1/f_ij] -> A_j[1/f_ji]`` that rewrites functions on
the overlap from patch-``i`` coordinates into patch-``j`` coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Mapping, Sequence

from .algebra import (
    AffineAlgebra,
    Ideal,
    RingMap,
    _contract,
    extended_ring,
    inverse,
    map_compose,
    map_inverse,
    map_validate,
)
from .polyring import ParseError, Polynomial, format_poly, fresh_names
from .report import Report


class GlueError(ValueError):
    pass


def localize(A: AffineAlgebra, f: Polynomial) -> tuple[AffineAlgebra, RingMap]:
    """A[1/f] presented as A[s]/(s*f - 1), with the canonical map A -> A[1/f]."""
    s_name = fresh_names(1, A.variables)[0]
    ring, pos = extended_ring(A, 1)
    s = ring.gen(0)
    rels = [r.embed(ring, pos) for r in A.relations]
    rels.append(s * f.embed(ring, pos) - 1)
    L = AffineAlgebra([s_name, *A.variables], rels, A.order)
    return L, RingMap(A, L, [L.ring.gen(k) for k in pos])


def localization_map(
    A: AffineAlgebra, f: Polynomial, base_images: Sequence[Polynomial], R: AffineAlgebra
) -> RingMap | None:
    """The map A[1/f] -> R extending ``A -> R`` (given on variables).

    Returns None when the image of ``f`` is not a unit of ``R``.
    """
    L, _ = localize(A, f)
    base = RingMap(A, R, base_images)
    inv = inverse(R, base.raw(f))
    if inv is None:
        return None
    return RingMap(L, R, [inv, *base.images])


@dataclass(frozen=True)
class GlueRecord:
    i: int
    j: int
    f_ij: Polynomial
    f_ji: Polynomial
    theta: RingMap

    @property
    def source(self) -> AffineAlgebra:
        return self.theta.source

    @property
    def target(self) -> AffineAlgebra:
        return self.theta.target

    def __str__(self):
        return f"{self.i}:{format_poly(self.f_ij)} ~ {self.j}:{format_poly(self.f_ji)}"


def _inverse_hook(L: AffineAlgebra, f: Polynomial):
    """Parser hook for ``#inv(f)``: the inverse variable of ``L = A[1/f]``."""

    def hook(arg: Polynomial, offset: int) -> Polynomial:
        base = Polynomial(L.ring, f.embed(L.ring, range(1, L.nvars)).data)
        if arg != base:
            raise ParseError(f"#inv() only inverts the localized element {format_poly(f)}", offset)
        return L.ring.gen(0)

    return hook


def make_glue(
    patches: Sequence[AffineAlgebra],
    i: int,
    j: int,
    f_ij: Polynomial | str,
    f_ji: Polynomial | str,
    images: Mapping[str, Polynomial | str] | Sequence[Polynomial | str],
    inverse_image: Polynomial | str | None = None,
) -> GlueRecord:
    """Build the record for ``i -> j`` from images of patch ``i``'s variables.

    ``images`` live in the localized patch ``j`` algebra (inverse variable
    first). When ``inverse_image`` is omitted, the image of patch ``i``'s
    inverse variable is computed as the inverse of ``theta(f_ij)``.
    """
    Ai, Aj = patches[i], patches[j]
    f_ij = Ai.parse(f_ij) if isinstance(f_ij, str) else f_ij
    f_ji = Aj.parse(f_ji) if isinstance(f_ji, str) else f_ji
    Li, _ = localize(Ai, f_ij)
    Lj, _ = localize(Aj, f_ji)
    hooks = {"#inv": _inverse_hook(Lj, f_ji)}
    if isinstance(images, Mapping):
        images = [images[v] for v in Ai.variables]
    imgs = [Lj.parse(g, hooks) if isinstance(g, str) else g for g in images]
    if inverse_image is None:
        base = RingMap(Ai, Lj, imgs)
        inverse_image = inverse(Lj, base.raw(f_ij))
        if inverse_image is None:
            raise GlueError(f"glue {i}->{j}: image of {format_poly(f_ij)} is not invertible")
    elif isinstance(inverse_image, str):
        inverse_image = Lj.parse(inverse_image, hooks)
    theta = RingMap(Li, Lj, [inverse_image, *imgs])
    return GlueRecord(i, j, f_ij, f_ji, theta)


def mirror(rec: GlueRecord) -> GlueRecord:
    """The ``j -> i`` record with the inverse transition map."""
    inv = map_inverse(rec.theta)
    if inv is None:
        raise GlueError(f"glue {rec}: transition map is not an isomorphism")
    return GlueRecord(rec.j, rec.i, rec.f_ji, rec.f_ij, inv)


class GluedScheme:
    """Affine patches with glue records keyed by ordered patch pairs."""

    def __init__(self, patches: Sequence[AffineAlgebra], glue: Sequence[GlueRecord] = (), name: str = ""):
        self.patches = tuple(patches)
        self.name = name
        self._glue: dict[tuple[int, int], GlueRecord] = {}
        for rec in glue:
            key = (rec.i, rec.j)
            if key in self._glue:
                raise GlueError(f"duplicate glue record for patches {key}")
            for idx in key:
                if not 0 <= idx < len(self.patches):
                    raise GlueError(f"glue record refers to missing patch {idx}")
            self._glue[key] = rec

    @classmethod
    def affine(cls, A: AffineAlgebra, name: str = "") -> GluedScheme:
        return cls([A], name=name)

    @classmethod
    def glued(cls, patches, specs, name: str = "") -> GluedScheme:
        """Build from ``(i, j, f_ij, f_ji, images)`` tuples; missing mirrors are derived."""
        records = [make_glue(patches, *spec) for spec in specs]
        have = {(r.i, r.j) for r in records}
        for r in list(records):
            if (r.j, r.i) not in have:
                records.append(mirror(r))
                have.add((r.j, r.i))
        return cls(patches, records, name)

    @property
    def glue(self) -> list[GlueRecord]:
        return [self._glue[k] for k in sorted(self._glue)]

    def glue_record(self, i: int, j: int) -> GlueRecord:
        try:
            return self._glue[(i, j)]
        except KeyError:
            raise GlueError(f"no glue record for patches ({i}, {j})") from None

    def has_glue(self, i: int, j: int) -> bool:
        return (i, j) in self._glue

    def __len__(self):
        return len(self.patches)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GluedScheme):
            return NotImplemented
        if self.patches != other.patches or self._glue.keys() != other._glue.keys():
            return False
        for k, r in self._glue.items():
            o = other._glue[k]
            if r.f_ij != o.f_ij or r.f_ji != o.f_ji or r.theta != o.theta:
                return False
        return True

    def __hash__(self):
        return hash((self.patches, tuple(sorted(self._glue))))

    def __repr__(self):
        label = self.name or "GluedScheme"
        return f"<{label}: {len(self.patches)} patches, {len(self._glue)} glue records>"


def transport(X: GluedScheme, i: int, j: int, I: Ideal) -> Ideal:
    """Move an ideal of patch ``i`` across the overlap into patch ``j``.

    Extends along A_i -> A_i[1/f_ij] -> A_j[1/f_ji] and contracts to A_j,
    so the result is f_ji-saturated.
    """
    rec = X.glue_record(i, j)
    Ai, Aj = X.patches[i], X.patches[j]
    if I.algebra != Ai:
        raise GlueError(f"ideal does not live on patch {i}")
    Lj = rec.target
    ext_images = rec.theta.images[1:]
    gens = [Lj.reduce(g.substitute(ext_images, Lj.ring)) for g in I.basis]
    gens = [g for g in gens if g]
    ring, pos = extended_ring(Aj, 1)
    lifted = [Polynomial(ring, g.data) for g in gens]
    lifted += [Polynomial(ring, r.data) for r in Lj.relations]
    return _contract(lifted, ring, 1, Aj)


def _is_identity_on(phi: RingMap) -> bool:
    A = phi.source
    return all(not A.reduce(img - A.ring.gen(k)) for k, img in enumerate(phi.images))


def validate_scheme(X: GluedScheme, cocycle: bool = False) -> Report:
    """Pairwise-checked validity of the glue data; optional triple-overlap cocycle."""
    rep = Report("scheme")
    for (i, j), rec in sorted(X._glue.items()):
        tag = f"glue {i}->{j}"
        Ai, Aj = X.patches[i], X.patches[j]
        Li, _ = localize(Ai, rec.f_ij)
        Lj, _ = localize(Aj, rec.f_ji)
        if rec.theta.source != Li or rec.theta.target != Lj:
            rep.check(f"{tag} localizations", False, "transition map has wrong source/target")
            continue
        rep.check(f"{tag} well-defined", map_validate(rec.theta),
                  "" if map_validate(rec.theta) else "relations not preserved")
        back = X._glue.get((j, i))
        if back is None:
            rep.check(f"{tag} mirror", False, f"missing record {j}->{i}")
            continue
        if back.f_ij != rec.f_ji or back.f_ji != rec.f_ij:
            rep.check(f"{tag} mirror", False, "mirror record localizes at different elements")
            continue
        if i < j:
            ok = (
                back.theta.source == rec.theta.target
                and map_validate(back.theta)
                and _is_identity_on(map_compose(back.theta, rec.theta))
                and _is_identity_on(map_compose(rec.theta, back.theta))
            )
            rep.check(f"{tag} inverse", ok, "" if ok else "transition maps are not mutually inverse")
    if cocycle:
        for i, j, k in permutations(range(len(X.patches)), 3):
            if not (X.has_glue(i, j) and X.has_glue(j, k) and X.has_glue(i, k)):
                continue
            ok = _cocycle_holds(X, i, j, k)
            rep.check(f"cocycle {i}->{j}->{k}", ok,
                      "" if ok else "transition maps disagree on the triple overlap")
    return rep


def _cocycle_holds(X: GluedScheme, i: int, j: int, k: int) -> bool:
    r_ij, r_jk, r_ik = X.glue_record(i, j), X.glue_record(j, k), X.glue_record(i, k)
    Ak = X.patches[k]
    f_ki, f_kj = X.glue_record(k, i).f_ij, X.glue_record(k, j).f_ij
    R, to_R = localize(Ak, f_ki * f_kj)
    base_k = list(to_R.images)
    rho_ki = localization_map(Ak, f_ki, base_k, R)
    rho_kj = localization_map(Ak, f_kj, base_k, R)
    if rho_ki is None or rho_kj is None:
        return False
    # patch-j coordinates into R through theta_jk
    Aj = X.patches[j]
    jk_images = [rho_kj(img) for img in r_jk.theta.images[1:]]
    from_j = localization_map(Aj, r_ij.f_ji, jk_images, R)
    if from_j is None:
        return False
    for idx in range(X.patches[i].nvars):
        path1 = rho_ki(r_ik.theta.images[1 + idx])
        path2 = from_j(r_ij.theta.images[1 + idx])
        if R.reduce(path1 - path2):
            return False
    return True


class SchemeMorphism:
    """Affine-local data of f: source -> target.

    ``assignment[i] = (t, phi)`` sends source patch ``i`` into target patch
    ``t`` with ``phi: target.patches[t] -> source.patches[i]``.
    """

    def __init__(self, source: GluedScheme, target: GluedScheme,
                 assignment: Sequence[tuple[int, RingMap]], name: str = ""):
        if len(assignment) != len(source.patches):
            raise ValueError("every source patch needs a target patch and ring map")
        for i, (t, phi) in enumerate(assignment):
            if not 0 <= t < len(target.patches):
                raise ValueError(f"source patch {i} sent to missing target patch {t}")
            if phi.source != target.patches[t] or phi.target != source.patches[i]:
                raise ValueError(f"ring map for source patch {i} has the wrong algebras")
        self.source = source
        self.target = target
        self.assignment = tuple(assignment)
        self.name = name
        self._report: Report | None = None

    @classmethod
    def identity(cls, X: GluedScheme) -> SchemeMorphism:
        return cls(X, X, [(i, RingMap.identity(A)) for i, A in enumerate(X.patches)], "id")

    def report(self) -> Report:
        if self._report is None:
            self._report = validate_morphism(self)
        return self._report

    def __repr__(self):
        return f"<SchemeMorphism {self.name or ''}: {self.source!r} -> {self.target!r}>"


def compose_morphisms(g: SchemeMorphism, f: SchemeMorphism) -> SchemeMorphism:
    """g ∘ f for f: X -> Y and g: Y -> W."""
    if f.target != g.source:
        raise ValueError("cannot compose: target(f) != source(g)")
    out = []
    for t, phi in f.assignment:
        t2, psi = g.assignment[t]
        out.append((t2, map_compose(phi, psi)))
    return SchemeMorphism(f.source, g.target, out, f"{g.name}∘{f.name}")


def validate_morphism(f: SchemeMorphism) -> Report:
    """Well-definedness per patch and pairwise agreement on source overlaps."""
    rep = Report("morphism")
    X, Y = f.source, f.target
    for i, (t, phi) in enumerate(f.assignment):
        ok = map_validate(phi)
        rep.check(f"patch {i} -> {t} well-defined", ok, "" if ok else "relations not preserved")
    for (i, j), rec in sorted(X._glue.items()):
        a, phi_i = f.assignment[i]
        b, phi_j = f.assignment[j]
        Lj = rec.target
        tag = f"overlap {i}->{j}"
        if Lj.is_zero_ring():
            rep.check(tag, True)
            continue
        # map2: B_a -> A_i -> A_i[1/f_ij] -> A_j[1/f_ji]
        theta_base = rec.theta.images[1:]
        map2 = [Lj.reduce(img.substitute(theta_base, Lj.ring)) for img in phi_i.images]
        # map1: B_b -> A_j -> A_j[1/f_ji]
        to_j = [Lj.ring.gen(k + 1) for k in range(X.patches[j].nvars)]
        map1 = [Lj.reduce(img.substitute(to_j, Lj.ring)) for img in phi_j.images]
        if a == b:
            ok = all(not Lj.reduce(p - q) for p, q in zip(map1, map2))
            rep.check(tag, ok, "" if ok else "patch maps disagree on the overlap")
            continue
        if not Y.has_glue(a, b):
            rep.check(tag, False, f"target patches {a} and {b} are not glued")
            continue
        yrec = Y.glue_record(a, b)
        ext1 = localization_map(Y.patches[b], yrec.f_ji, map1, Lj)
        if ext1 is None:
            rep.check(tag, False, f"image of {format_poly(yrec.f_ji)} is not invertible on the overlap")
            continue
        ok = all(
            not Lj.reduce(ext1(yrec.theta.images[1 + k]) - map2[k])
            for k in range(Y.patches[a].nvars)
        )
        rep.check(tag, ok, "" if ok else "patch maps disagree on the overlap")
    return rep
