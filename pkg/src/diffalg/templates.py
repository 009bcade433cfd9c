"""Symbolic relation templates: enumeration and exact instantiation.

A template pins a family letter together with the index data (I, S, the
tagged non-coupling components, the component partition of R) and carries,
for every generator pair, the two word coefficients as small linear
expressions in named parameters.  ``generate_templates`` enumerates the
admissible index structures for a given size — either one representative
row per canonical grouping (``mode="paper"``) or every index structure
(``mode="full"``) — and ``instantiate_template`` turns a template plus a
rational value for each parameter into a concrete presentation, enforcing
the template's restrictions exactly.

Parameter naming (generator indices are single decimal digits here, which
keeps names unambiguous for every size this module enumerates):

* ``g``          uniform coefficient on the interacting set (A_I, B)
* ``g<i>``       per-index coefficient (A_II on I, bystander coupling,
                 single-interacting rows)
* ``L``, ``L<k>``  trailing offset, per component for single-interacting rows
* ``go<k>``      signed coefficient of the k-th non-coupling "circ" component
* ``gbp<k>``/``gbm<k>``  lower/upper coefficients of the k-th "bullet" component
* ``g<u><v>``    free coefficient of the written word ``D_u D_v``
* ``q<v><u>``    free trailing ratio for fully non-interacting rows
* ``x<i>``       inhomogeneous scalar of an interacting index
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .presentation import AlgebraPresentation
from .scalars import format_rational, rational

__all__ = ["TemplateError", "TemplateSkeleton", "generate_templates",
           "instantiate_template", "render_template"]


class TemplateError(ValueError):
    """Raised when a template cannot be instantiated from the given values."""


# A coefficient expression is a tuple of (integer, name-or-None) terms; the
# empty tuple is zero and a None name stands for the constant 1.
_ZERO: tuple = ()


def _sym(name: str) -> tuple:
    return ((1, name),)


def _neg(name: str) -> tuple:
    return ((-1, name),)


def _diff(a: str, b: str) -> tuple:
    return ((1, a), (-1, b))


def _total(expr: tuple, values: dict):
    acc = rational(0)
    for c, name in expr:
        acc = acc + c * (values[name] if name else rational(1))
    return acc


def _render_expr(expr: tuple) -> str:
    if not expr:
        return "0"
    if expr[0][0] < 0:
        flipped = tuple((-c, name) for c, name in expr)
        return f"-{_render_expr(flipped)}"
    if len(expr) == 1:
        c, name = expr[0]
        if name is None:
            return format_rational(c)
        return name if c == 1 else f"{c}*{name}"
    parts = []
    for c, name in expr:
        body = name if name else format_rational(abs(c))
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return "(" + " ".join(parts) + ")"


def _render_relation(u: int, v: int, e_uv: tuple, e_vu: tuple,
                     u_interacting: bool, v_interacting: bool) -> str:
    lhs_terms = []
    if e_uv:
        lhs_terms.append((e_uv, f"D{u} D{v}"))
    if e_vu:
        lhs_terms.append((tuple((-c, nm) for c, nm in e_vu), f"D{v} D{u}"))
    parts = []
    for expr, word in lhs_terms:
        coeff = _render_expr(expr)
        if coeff == "1":
            body = word
        elif coeff == "-1":
            body = f"-{word}"
        else:
            body = f"{coeff} * {word}"
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(f"- {body[1:]}")
        else:
            parts.append(f"+ {body}")
    lhs = " ".join(parts) if parts else "0"
    rhs_parts = []
    if v_interacting:
        rhs_parts.append(f"x{v} * D{u}")
    if u_interacting:
        first = not rhs_parts
        rhs_parts.append(f"-x{u} * D{v}" if first else f"- x{u} * D{v}")
    rhs = " ".join(rhs_parts) if rhs_parts else "0"
    return f"{lhs} = {rhs}"


@dataclass(frozen=True)
class TemplateSkeleton:
    n: int
    family: str
    I: tuple  # noqa: E741
    S: tuple
    T_circ: tuple
    T_bullet: tuple
    R_components: tuple
    relations: tuple
    restrictions: tuple
    params: tuple
    cells: tuple          # (u, v, expr_uv, expr_vu) for every pair u < v
    checked: tuple        # (expr_left, expr_right, display) enforced as !=
    pinned_components: tuple  # components whose connectivity is enforced
    loose: bool = False


def _free_cell(u, v, same_component, family):
    """Coefficients of a pair outside every closed pattern."""
    if family == "D":
        lead: tuple = ((1, None),)
        trail = _sym(f"q{v}{u}") if same_component else _ZERO
    else:
        lead = _sym(f"g{u}{v}")
        trail = _sym(f"g{v}{u}") if same_component else _ZERO
    return lead, trail


def _build_skeleton(n, family, I, S, t_circ, t_bullet, r_comps,  # noqa: E741
                    loose=False, dense=False) -> TemplateSkeleton:
    I = tuple(sorted(I))  # noqa: E741
    S = tuple(sorted(S))
    t_circ = tuple(tuple(sorted(c)) for c in t_circ)
    t_bullet = tuple(tuple(sorted(c)) for c in t_bullet)
    r_comps = tuple(tuple(sorted(c)) for c in r_comps)

    role: dict = {}
    for a in I:
        role[a] = ("I", 0)
    for a in S:
        role[a] = ("S", 0)
    for k, comp in enumerate(t_circ, start=1):
        for a in comp:
            role[a] = ("Tc", k)
    for k, comp in enumerate(t_bullet, start=1):
        for a in comp:
            role[a] = ("Tb", k)
    for k, comp in enumerate(r_comps, start=1):
        for a in comp:
            role[a] = ("R", k)

    params: dict = {}

    def use(name):
        params.setdefault(name, None)
        return name

    if family in ("A_I", "B"):
        use("g")
    if family == "B":
        use("L")
    if family == "A_II":
        for i in I:
            use(f"g{i}")

    cells = []
    free_leads: list = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            ru, ku = role[u]
            rv, kv = role[v]
            pattern_pair = {ru, rv} & {"I"}
            if ru == "I" and rv == "I":
                if family == "A_I":
                    cell = (_sym("g"), _sym("g"))
                elif family == "A_II":
                    cell = (_diff(f"g{u}", f"g{v}"), _ZERO)
                else:  # B
                    cell = (_sym("g"), _diff("g", "L"))
            elif pattern_pair and "S" in (ru, rv) and family in ("A_I", "B"):
                s = u if ru == "S" else v
                gs = use(f"g{s}")
                if family == "A_I":
                    cell = (_sym(gs), _sym(gs))
                else:
                    i, j = I
                    def b_word(x, y):
                        return _sym(gs) if (x == i or y == j) else _diff(gs, "L")
                    cell = (b_word(u, v), b_word(v, u))
            elif pattern_pair and "Tc" in (ru, rv):
                t, k = (u, ku) if ru == "Tc" else (v, kv)
                a = v if ru == "Tc" else u
                go = use(f"go{k}")
                if family == "A_I":
                    cell = (_sym(go), _ZERO) if a < t else (_neg(go), _ZERO)
                elif family == "A_II":
                    gi = f"g{a}"
                    if a < t:
                        cell = (((1, gi), (1, go)), _ZERO)
                    else:
                        cell = (((-1, gi), (-1, go)), _ZERO)
                else:  # B
                    i, j = I
                    if a == i:
                        cell = (_sym(go), _ZERO) if a < t else (_neg(go), _ZERO)
                    else:
                        if a < t:
                            cell = (_diff(go, "L"), _ZERO)
                        else:
                            cell = (((-1, go), (1, "L")), _ZERO)
            elif pattern_pair and "Tb" in (ru, rv):
                t, k = (u, ku) if ru == "Tb" else (v, kv)
                a = v if ru == "Tb" else u
                if family == "A_I":
                    name = use(f"gbp{k}") if a < t else use(f"gbm{k}")
                    cell = (_sym(name), _ZERO)
                elif family == "A_II":
                    gi = f"g{a}"
                    if a < t:
                        cell = (((1, gi), (1, use(f"gbp{k}"))), _ZERO)
                    else:
                        cell = (((1, use(f"gbm{k}")), (-1, gi)), _ZERO)
                else:  # B
                    name = use(f"gbp{k}") if a < t else use(f"gbm{k}")
                    cell = (_sym(name), _ZERO)
            elif pattern_pair and family == "C":
                r = u if rv == "I" else v
                _, k = role[r]
                gr = use(f"g{r}")
                lk = use(f"L{k}")
                offset = ((1, gr), (-1, lk))
                if ru == "I":
                    cell = (_sym(gr), offset)
                else:
                    cell = (offset, _sym(gr))
            else:
                same = ru == rv and ku == kv and ru in ("Tc", "Tb", "R", "S")
                lead, trail = _free_cell(u, v, same, family)
                for _, name in lead + trail:
                    if name:
                        use(name)
                if lead[0][1] is not None:
                    free_leads.append(lead[0][1])
                cell = (lead, trail)
            cells.append((u, v, cell[0], cell[1]))

    # Restrictions: family-specific named conditions first, then the
    # invertibility of every free leading coefficient, then the two-sided
    # chain that exhibits each pinned component's connectivity.
    checked: list = []
    display: list = []

    def require(left: tuple, right: tuple, enforce=True):
        text = f"{_render_expr(left)} != {_render_expr(right)}"
        display.append(text)
        if enforce:
            checked.append((left, right, text))

    if family == "A_I":
        require(_sym("g"), _ZERO)
        for s in S:
            require(_sym(f"g{s}"), _ZERO)
    elif family == "A_II":
        for a, i in enumerate(I):
            for j in I[a + 1:]:
                require(_sym(f"g{i}"), _sym(f"g{j}"))
    elif family == "B":
        require(_sym("g"), _ZERO)
        require(_sym("g"), _sym("L"))
        for s in S:
            require(_sym(f"g{s}"), _ZERO)
            require(_sym(f"g{s}"), _sym("L"))
    elif family == "C":
        for k, comp in enumerate(r_comps, start=1):
            for r in comp:
                require(_sym(f"g{r}"), _ZERO)
                require(_sym(f"g{r}"), _sym(f"L{k}"))

    for k in range(1, len(t_circ) + 1):
        require(_sym(f"go{k}"), _ZERO)
        if family == "A_II":
            for i in I:
                require(_sym(f"g{i}"), _sym(f"go{k}"))
        if family == "B":
            require(_sym(f"go{k}"), _sym("L"))
    for k in range(1, len(t_bullet) + 1):
        require(_sym(f"gbp{k}"), _ZERO)
        require(_sym(f"gbm{k}"), _ZERO)
        if family == "A_II":
            for i in I:
                require(_sym(f"g{i}"), _neg(f"gbp{k}"))
                require(_sym(f"g{i}"), _sym(f"gbm{k}"))

    if dense:
        # fully-interlocked representative row: every ratio invertible
        for u, v in combinations(range(1, n + 1), 2):
            require(_sym(f"q{v}{u}"), _ZERO)
    else:
        for name in free_leads:
            require(_sym(name), _ZERO, enforce=False)
        if not loose:
            for comp in t_circ + t_bullet + r_comps:
                for a, b in zip(comp, comp[1:]):
                    trail = f"q{b}{a}" if family == "D" else f"g{b}{a}"
                    require(_sym(trail), _ZERO, enforce=False)

    for i in I:
        use(f"x{i}")

    relations = tuple(
        _render_relation(u, v, e_uv, e_vu, u in I, v in I)
        for u, v, e_uv, e_vu in cells)

    return TemplateSkeleton(
        n=n, family=family, I=I, S=S, T_circ=t_circ, T_bullet=t_bullet,
        R_components=r_comps, relations=relations,
        restrictions=tuple(display), params=tuple(params),
        cells=tuple(cells), checked=tuple(checked),
        pinned_components=t_circ + t_bullet + r_comps, loose=loose)


def instantiate_template(skel: TemplateSkeleton, values: dict
                         ) -> AlgebraPresentation:
    """Evaluate a template at rational parameter values.

    Every parameter must be supplied; restrictions, leading invertibility,
    nonzero inhomogeneous scalars and the connectivity of each pinned
    component are all enforced, so the result always decomposes back onto
    the template's index structure.
    """
    vals = {}
    for key, raw in values.items():
        if key not in skel.params:
            raise TemplateError(f"unknown parameter: {key}")
        vals[key] = rational(raw)
    for name in skel.params:
        if name not in vals:
            raise TemplateError(f"missing parameter: {name}")

    for left, right, text in skel.checked:
        if _total(left, vals) == _total(right, vals):
            raise TemplateError(f"restriction violated: {text}")
    for i in skel.I:
        if vals[f"x{i}"] == 0:
            raise TemplateError(
                f"x{i} must be nonzero on the interacting set")

    g: dict = {}
    for u, v, e_uv, e_vu in skel.cells:
        lead = _total(e_uv, vals)
        if lead == 0:
            raise TemplateError(
                f"instantiation makes the coefficient of D{u} D{v} vanish, "
                f"but the leading slot of a pair must be invertible")
        g[(u, v)] = lead
        g[(v, u)] = _total(e_vu, vals)

    if not skel.loose:
        for comp in skel.pinned_components:
            if len(comp) < 2:
                continue
            seen = {comp[0]}
            frontier = [comp[0]]
            while frontier:
                a = frontier.pop()
                for b in comp:
                    if b not in seen and g[(a, b)] != 0 and g[(b, a)] != 0:
                        seen.add(b)
                        frontier.append(b)
            if len(seen) != len(comp):
                raise TemplateError(
                    f"component {{{','.join(map(str, comp))}}} is not "
                    f"connected through two-sided pairs")

    x = {i: vals[f"x{i}"] for i in skel.I}
    return AlgebraPresentation(skel.n, g, x)


def _canonical_t_split(I, t_members):  # noqa: E741
    """Group non-coupling indices into the canonical components.

    Every maximal run strictly inside one gap between consecutive
    interacting indices becomes its own "bullet" component; everything
    outside the gaps (below the least or above the greatest interacting
    index) is collected into a single "circ" component.
    """
    gaps = list(zip(I, I[1:]))
    bullets = []
    circ: list = []
    for lo, hi in gaps:
        inside = [t for t in t_members if lo < t < hi]
        if inside:
            bullets.append(tuple(inside))
    outside = [t for t in t_members
               if not any(lo < t < hi for lo, hi in gaps)]
    if outside:
        circ.append(tuple(outside))
    return tuple(circ), tuple(bullets)


def _tag_components(I, comps):  # noqa: E741
    """Split arbitrary components into (circ, bullet) by the gap criterion."""
    gaps = list(zip(I, I[1:]))
    circ = []
    bullets = []
    for comp in comps:
        if any(all(lo < t < hi for t in comp) for lo, hi in gaps):
            bullets.append(comp)
        else:
            circ.append(comp)
    return tuple(circ), tuple(bullets)


def _subsets_desc(items):
    """All subsets, largest first, lexicographic inside each size."""
    items = tuple(items)
    for size in range(len(items), -1, -1):
        yield from combinations(items, size)


def _set_partitions(items):
    items = list(items)
    if not items:
        yield ()
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + (tuple(sorted((head,) + part[k])),) + part[k + 1:]
        yield ((head,),) + part


def _partitions_sorted(items):
    parts = {tuple(sorted(p, key=min)) for p in _set_partitions(items)}
    return sorted(parts, key=lambda p: (len(p), p))


def _nine_small_rows() -> list:
    rows = [
        _build_skeleton(3, "A_I", (1, 2, 3), (), (), (), ()),
        _build_skeleton(3, "A_II", (1, 2, 3), (), (), (), ()),
        _build_skeleton(3, "B", (1, 3), (2,), (), (), ()),
        _build_skeleton(3, "B", (1, 3), (), (), ((2,),), ()),
        _build_skeleton(3, "B", (1, 2), (), ((3,),), (), ()),
        _build_skeleton(3, "B", (2, 3), (), ((1,),), (), ()),
        _build_skeleton(3, "C", (1,), (), (), (), ((2, 3),)),
        _build_skeleton(3, "C", (1,), (), (), (), ((2,), (3,))),
        _build_skeleton(3, "D", (), (), (), (), ((1, 2, 3),), loose=True),
    ]
    return rows


def generate_templates(n: int, mode: str = "paper") -> list:
    """Enumerate the template rows for ``n`` generators.

    ``mode="paper"`` emits one representative row per canonical grouping;
    for ``n == 3`` that is the list of nine small cases.  ``mode="full"``
    enumerates every admissible index structure: arbitrary bystander sets,
    arbitrary component partitions of the non-coupling part, and arbitrary
    component partitions for single- and zero-interacting rows.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if mode not in ("paper", "full"):
        raise ValueError(f"unknown mode: {mode!r}")
    everything = tuple(range(1, n + 1))
    rows: list = []

    if mode == "paper":
        if n == 3:
            return _nine_small_rows()
        for size in range(3, n):
            for I in combinations(everything, size):  # noqa: E741
                rest = tuple(a for a in everything if a not in I)
                for S in _subsets_desc(rest):
                    if not S:
                        continue
                    t_members = tuple(a for a in rest if a not in S)
                    circ, bullets = _canonical_t_split(I, t_members)
                    rows.append(_build_skeleton(
                        n, "A_I", I, S, circ, bullets, ()))
        for size in range(3, n + 1):
            for I in combinations(everything, size):  # noqa: E741
                rest = tuple(a for a in everything if a not in I)
                circ, bullets = _canonical_t_split(I, rest)
                rows.append(_build_skeleton(
                    n, "A_II", I, (), circ, bullets, ()))
        for I in combinations(everything, 2):  # noqa: E741
            rest = tuple(a for a in everything if a not in I)
            for S in _subsets_desc(rest):
                t_members = tuple(a for a in rest if a not in S)
                circ, bullets = _canonical_t_split(I, t_members)
                rows.append(_build_skeleton(n, "B", I, S, circ, bullets, ()))
        for i in everything:
            rest = tuple(a for a in everything if a != i)
            rows.append(_build_skeleton(n, "C", (i,), (), (), (), (rest,)))
        rows.append(_build_skeleton(n, "D", (), (), (), (), (everything,),
                                    dense=True))
        return rows

    for size in range(3, n + 1):
        for I in combinations(everything, size):  # noqa: E741
            rest = tuple(a for a in everything if a not in I)
            for S in _subsets_desc(rest):
                t_members = tuple(a for a in rest if a not in S)
                for part in _partitions_sorted(t_members):
                    circ, bullets = _tag_components(I, part)
                    rows.append(_build_skeleton(
                        n, "A_I", I, S, circ, bullets, ()))
    for size in range(3, n + 1):
        for I in combinations(everything, size):  # noqa: E741
            rest = tuple(a for a in everything if a not in I)
            for part in _partitions_sorted(rest):
                circ, bullets = _tag_components(I, part)
                rows.append(_build_skeleton(
                    n, "A_II", I, (), circ, bullets, ()))
    for I in combinations(everything, 2):  # noqa: E741
        rest = tuple(a for a in everything if a not in I)
        for S in _subsets_desc(rest):
            t_members = tuple(a for a in rest if a not in S)
            for part in _partitions_sorted(t_members):
                circ, bullets = _tag_components(I, part)
                rows.append(_build_skeleton(n, "B", I, S, circ, bullets, ()))
    for i in everything:
        rest = tuple(a for a in everything if a != i)
        for part in _partitions_sorted(rest):
            rows.append(_build_skeleton(n, "C", (i,), (), (), (), part))
    for part in _partitions_sorted(everything):
        rows.append(_build_skeleton(n, "D", (), (), (), (), part))
    return rows


def _fmt_indices(indices) -> str:
    return " ".join(map(str, indices)) if indices else "-"


def _fmt_components(comps) -> str:
    if not comps:
        return "-"
    return " ".join("{" + ",".join(map(str, c)) + "}" for c in comps)


def render_template(skel: TemplateSkeleton, index: int) -> str:
    lines = [
        f"template: {index}",
        f"family: {skel.family}",
        f"I: {_fmt_indices(skel.I)}",
        f"S: {_fmt_indices(skel.S)}",
        f"Tcirc: {_fmt_components(skel.T_circ)}",
        f"Tbullet: {_fmt_components(skel.T_bullet)}",
        f"R: {_fmt_components(skel.R_components)}",
    ]
    for rel in skel.relations:
        lines.append(f"relation: {rel}")
    for restr in skel.restrictions:
        lines.append(f"restriction: {restr}")
    lines.append(f"params: {' '.join(skel.params)}")
    return "\n".join(lines)
