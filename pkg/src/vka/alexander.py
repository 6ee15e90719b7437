"""Arc-group presentations of virtual knot diagrams over the operator group Z^2.

Each arc of a diagram contributes a generator family indexed by Z^2; letters
carry multiplicative exponents u^j v^k.  Every classical crossing contributes
two relation families.  Writing OI/OO for the over-strand's incoming and
outgoing arcs and UI/UO for the under-strand's:

    positive crossing:   OI * UI^u = UO * OO^u      OI^v = OO
    negative crossing:   UI * OI^u = OO * UO^u      OO^v = OI

Setting v = 1 recovers the classical one-variable arc relations, with the
two halves of each over-arc merged.  Abelianizing yields presentation
matrices over Z[u^+-1, v^+-1] whose minors drive all downstream invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .diagram import LONG, arc_structure
from .laurent import UV, LaurentPoly, TVAR


class OpLetter(NamedTuple):
    gen: str
    exp: tuple  # (u_exp, v_exp)
    sign: int  # +1 or -1


class OpRelation(NamedTuple):
    left: tuple  # word: tuple of OpLetter
    right: tuple


E0 = (0, 0)
EU = (1, 0)
EV = (0, 1)


def arc_names(count):
    """Arc generator names in traversal order: a, b, c, ... then g26, g27, ..."""
    names = []
    for i in range(count):
        if i < 26:
            names.append(chr(ord("a") + i))
        else:
            names.append(f"g{i}")
    return names


# -- words ------------------------------------------------------------


def _exp_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _exp_neg(a):
    return (-a[0], -a[1])


def word_shift(word, exp):
    """Apply the Z^2 operator x -> x^exp to every letter."""
    if exp == E0:
        return tuple(word)
    return tuple(OpLetter(l.gen, _exp_add(l.exp, exp), l.sign) for l in word)


def word_inverse(word):
    return tuple(OpLetter(l.gen, l.exp, -l.sign) for l in reversed(word))


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1].gen == letter.gen and out[-1].exp == letter.exp \
                and out[-1].sign == -letter.sign:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def letter_str(l):
    body = l.gen
    j, k = l.exp
    if (j, k) != (0, 0):
        factors = []
        if j:
            factors.append("u" if j == 1 else f"u^{j}")
        if k:
            factors.append("v" if k == 1 else f"v^{k}")
        mono = " ".join(factors)
        if len(factors) == 1 and factors[0] in ("u", "v"):
            body += f"^{mono}"
        else:
            body += f"^{{{mono}}}"
    return body if l.sign > 0 else "~" + body


def word_str(word):
    return " ".join(letter_str(l) for l in word) if word else "1"


def relation_str(rel):
    return f"{word_str(rel.left)} = {word_str(rel.right)}"


def normalize_relation(rel):
    """Free-reduce both sides and move edge inverse letters across.

    A trailing inverse on one side becomes a trailing positive letter on the
    other (right multiplication), a leading inverse becomes a leading
    positive letter (left multiplication).  The abelianized row is
    unchanged; the displayed form matches hand calculation.
    """
    left, right = list(free_reduce(rel.left)), list(free_reduce(rel.right))
    changed = True
    while changed:
        changed = False
        if left and left[-1].sign < 0:
            right.append(OpLetter(left[-1].gen, left[-1].exp, 1))
            left.pop()
            changed = True
        elif right and right[-1].sign < 0:
            left.append(OpLetter(right[-1].gen, right[-1].exp, 1))
            right.pop()
            changed = True
        elif left and left[0].sign < 0:
            right.insert(0, OpLetter(left[0].gen, left[0].exp, 1))
            left.pop(0)
            changed = True
        elif right and right[0].sign < 0:
            left.insert(0, OpLetter(right[0].gen, right[0].exp, 1))
            right.pop(0)
            changed = True
        if changed:
            left, right = list(free_reduce(left)), list(free_reduce(right))
    return OpRelation(tuple(left), tuple(right))


def relation_is_trivial(rel):
    return rel.left == rel.right


def same_relation(r1, r2):
    """Equality of relations regardless of which side is written first."""
    return r1 == r2 or (r1.left, r1.right) == (r2.right, r2.left)


@dataclass(frozen=True)
class GroupPresentationZ2:
    """Generators, Z^2-operator relations, and the two distinguished ends.

    ``end_minus`` / ``end_plus`` are words expressing the images of the
    unbounded end arcs (None for closed diagrams).  For a freshly built long
    diagram they are the single first and last arc generators.
    """

    generators: tuple
    relations: tuple
    end_minus: Optional[tuple] = None
    end_plus: Optional[tuple] = None

    def __str__(self):
        gens = ", ".join(self.generators)
        rels = ", ".join(relation_str(r) for r in self.relations)
        return f"<{gens} | {rels}>"

    def to_json(self):
        """JSON-ready dict mirroring the presentation's fields."""

        def word(w):
            return [[l.gen, list(l.exp), l.sign] for l in w]

        return {
            "generators": list(self.generators),
            "relations": [{"left": word(r.left), "right": word(r.right)} for r in self.relations],
            "end_minus": word(self.end_minus) if self.end_minus is not None else None,
            "end_plus": word(self.end_plus) if self.end_plus is not None else None,
        }


def extended_presentation(d):
    """Two-variable arc-group presentation of a diagram."""
    arcs = arc_structure(d)
    names = arc_names(arcs.arc_count)
    relations = []
    sign_of = {p.crossing: p.sign for p in d.passages}
    for cid in sorted(arcs.crossings):
        inc = arcs.crossings[cid]
        oi, oo = names[inc.over_in], names[inc.over_out]
        ui, uo = names[inc.under_in], names[inc.under_out]
        if sign_of[cid] > 0:
            relations.append(OpRelation(
                (OpLetter(oi, E0, 1), OpLetter(ui, EU, 1)),
                (OpLetter(uo, E0, 1), OpLetter(oo, EU, 1)),
            ))
            relations.append(OpRelation(
                (OpLetter(oi, EV, 1),),
                (OpLetter(oo, E0, 1),),
            ))
        else:
            relations.append(OpRelation(
                (OpLetter(ui, E0, 1), OpLetter(oi, EU, 1)),
                (OpLetter(oo, E0, 1), OpLetter(uo, EU, 1)),
            ))
            relations.append(OpRelation(
                (OpLetter(oo, EV, 1),),
                (OpLetter(oi, E0, 1),),
            ))
    if d.kind == LONG:
        end_minus = (OpLetter(names[0], E0, 1),)
        end_plus = (OpLetter(names[-1], E0, 1),)
    else:
        end_minus = end_plus = None
    return GroupPresentationZ2(tuple(names), tuple(relations), end_minus, end_plus)


# -- Tietze elimination ------------------------------------------------


def _substitute_word(word, gen, replacement):
    out = []
    for letter in word:
        if letter.gen != gen:
            out.append(letter)
            continue
        rep = word_shift(replacement, letter.exp)
        if letter.sign < 0:
            rep = word_inverse(rep)
        out.extend(rep)
    return free_reduce(tuple(out))


def _occurrences(gen, rel):
    return sum(1 for l in rel.left + rel.right if l.gen == gen)


def _solve(rel, gen):
    """Express ``gen`` from a relation containing it exactly once."""
    w = free_reduce(rel.left + word_inverse(rel.right))
    idx = next(i for i, l in enumerate(w) if l.gen == gen)
    letter = w[idx]
    p, q = w[:idx], w[idx + 1:]
    if letter.sign > 0:
        expr = word_inverse(p) + word_inverse(q)
    else:
        expr = q + p
    return free_reduce(word_shift(expr, _exp_neg(letter.exp)))


def _shaped_candidate(rel):
    """Substitution-shaped relation: one side is a single positive letter."""
    options = []
    for side, other in ((rel.left, rel.right), (rel.right, rel.left)):
        if len(side) == 1 and side[0].sign > 0:
            g = side[0].gen
            if all(l.gen != g for l in other):
                options.append((side[0], other))
    if not options:
        return None
    for letter, other in options:  # prefer a bare-exponent letter
        if letter.exp == E0:
            return letter.gen, free_reduce(word_shift(other, _exp_neg(letter.exp)))
    letter, other = options[0]
    return letter.gen, free_reduce(word_shift(other, _exp_neg(letter.exp)))


def _dedupe(relations):
    seen = set()
    out = []
    for rel in relations:
        key = frozenset({rel.left, rel.right})
        if key not in seen:
            seen.add(key)
            out.append(rel)
    return out


def tietze_eliminate(p):
    """Eliminate redundant generators, deterministically.

    First pass: repeatedly use the first relation with a whole side equal to
    a single positive letter (preferring the bare-exponent side) to delete
    that generator.  Second pass: delete non-end generators that occur
    exactly once in some relation, preferring exponent-free occurrences and
    scanning generators in arc order.  End-arc generators survive the second
    pass so the distinguished elements stay visible; if the first pass
    consumes one, its image is retained as a word.
    """
    gens = list(p.generators)
    rels = [normalize_relation(r) for r in p.relations]
    rels = _dedupe([r for r in rels if not relation_is_trivial(r)])
    ends = [p.end_minus, p.end_plus]
    protected = set()
    for e in ends:
        if e is not None:
            protected.update(l.gen for l in e)

    def eliminate(gen, expr, used_rel):
        gens.remove(gen)
        new = []
        for r in rels:
            if r is used_rel:
                continue
            r2 = normalize_relation(OpRelation(
                _substitute_word(r.left, gen, expr),
                _substitute_word(r.right, gen, expr),
            ))
            if not relation_is_trivial(r2):
                new.append(r2)
        rels[:] = _dedupe(new)
        for i, e in enumerate(ends):
            if e is not None:
                ends[i] = _substitute_word(e, gen, expr)

    while True:
        # pass 1: substitution-shaped relations
        step = None
        for r in rels:
            cand = _shaped_candidate(r)
            if cand:
                step = (cand[0], cand[1], r)
                break
        if step:
            eliminate(*step)
            continue
        # pass 2: single-occurrence generators, exponent-free first
        step = None
        for want_bare in (True, False):
            for g in gens:
                if g in protected:
                    continue
                for r in rels:
                    if _occurrences(g, r) != 1:
                        continue
                    letter = next(l for l in r.left + r.right if l.gen == g)
                    if want_bare and letter.exp != E0:
                        continue
                    step = (g, _solve(r, g), r)
                    break
                if step:
                    break
            if step:
                break
        if not step:
            break
        eliminate(*step)

    return GroupPresentationZ2(tuple(gens), tuple(rels), *(tuple(e) if e is not None else None for e in ends))


def quotient_kill(p, victims):
    """Quotient by the normal closure of whole generator families.

    Victim generators are deleted and every letter mentioning them erased
    (all their Z^2-translates become the identity).  Rows are kept one-for-
    one so abelianization commutes with the quotient.
    """
    victims = set(victims)
    unknown = victims - set(p.generators)
    if unknown:
        raise KeyError(f"unknown generators {sorted(unknown)}")

    def erase(word):
        return tuple(l for l in word if l.gen not in victims)

    rels = tuple(
        normalize_relation(OpRelation(erase(r.left), erase(r.right))) for r in p.relations
    )
    gens = tuple(g for g in p.generators if g not in victims)
    ends = [p.end_minus, p.end_plus]
    ends = [erase(e) if e is not None else None for e in ends]
    return GroupPresentationZ2(gens, rels, ends[0], ends[1])


def is_trivial_presentation(p):
    """True when elimination empties the generator list (trivial group).

    A False answer is not a proof of nontriviality at the symbolic level.
    """
    return len(tietze_eliminate(p).generators) == 0


# -- abelianization ----------------------------------------------------


@dataclass(frozen=True)
class PresentationMatrix:
    """Relations-by-generators matrix over a tagged coefficient ring.

    ring is one of "L2" (Z[u,v] Laurent), "L1" (Z[t] Laurent), "Z", or
    "Z/<m>"; entries are LaurentPoly for the Laurent rings and int otherwise.
    """

    ring: str
    cols: tuple  # generator names
    rows: tuple  # tuple of tuples of entries

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))


def _word_row(word, cols, vars=UV):
    coeffs = {g: LaurentPoly.zero(vars) for g in cols}
    for l in word:
        mono = LaurentPoly.monomial(vars, l.exp, l.sign)
        coeffs[l.gen] = coeffs[l.gen] + mono
    return tuple(coeffs[g] for g in cols)


def abelianize(p):
    """Presentation matrix of the abelianized module over Z[u^+-1, v^+-1]."""
    rows = []
    for rel in p.relations:
        left = _word_row(rel.left, p.generators)
        right = _word_row(rel.right, p.generators)
        rows.append(tuple(a - b for a, b in zip(left, right)))
    return PresentationMatrix("L2", tuple(p.generators), tuple(rows))


def specialize_uv(m, u_image, v_image):
    """Entry-wise ring homomorphism from an L2 matrix into Z[t^+-1]."""
    if m.ring != "L2":
        raise ValueError("specialize_uv expects an L2 matrix")
    rows = tuple(
        tuple(e.subs((u_image, v_image)) for e in row) for row in m.rows
    )
    return PresentationMatrix("L1", m.cols, rows)


T_GEN = LaurentPoly.monomial(TVAR, (1,))
T_ONE = LaurentPoly.const(TVAR, 1)


def one_variable(m):
    """Set v = 1 and rename u to t (the one-variable specialization)."""
    return specialize_uv(m, T_GEN, T_ONE)


def diagonal_t(m):
    """Set u = v = t."""
    return specialize_uv(m, T_GEN, T_GEN)


def end_generator_columns(p, m):
    """Images of the two end elements as column vectors over m's ring."""
    if p.end_minus is None or p.end_plus is None:
        raise ValueError("presentation has no distinguished ends")
    if m.ring != "L2":
        raise ValueError("end columns are computed over the L2 matrix")
    if tuple(m.cols) != tuple(p.generators):
        raise ValueError("matrix does not match presentation")
    return _word_row(p.end_minus, m.cols), _word_row(p.end_plus, m.cols)


# -- merged one-variable matrix ----------------------------------------


def under_arc_classes(d):
    """Union-find classes of arcs after merging each over-arc pair.

    These are the arcs of the diagram when over-arcs are not split, i.e.
    arcs divided at undercrossings only.
    """
    arcs = arc_structure(d)
    parent = list(range(arcs.arc_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for inc in arcs.crossings.values():
        a, b = find(inc.over_in), find(inc.over_out)
        if a != b:
            parent[max(a, b)] = min(a, b)
    reps = sorted({find(i) for i in range(arcs.arc_count)})
    index = {rep: i for i, rep in enumerate(reps)}
    return [index[find(i)] for i in range(arcs.arc_count)], len(reps)


@dataclass(frozen=True)
class OneVarModule:
    """The merged one-variable presentation A(t) of a diagram.

    c relations by c+1 generators for a long diagram with c crossings
    (c by c for closed).  minus_col / plus_col locate the end arcs' classes
    for long diagrams.
    """

    matrix: PresentationMatrix
    minus_col: Optional[int]
    plus_col: Optional[int]


def one_var_matrix(d):
    """Classical-style arc matrix: rows UO - t*UI - (1-t)*OV per crossing."""
    classes, count = under_arc_classes(d)
    arcs = arc_structure(d)
    names = arc_names(arcs.arc_count)
    col_names = []
    seen = {}
    for arc, cls in enumerate(classes):
        if cls not in seen:
            seen[cls] = names[arc]
            col_names.append(names[arc])
    t = T_GEN
    tinv = t.inverse()
    one = T_ONE
    rows = []
    for cid in sorted(arcs.crossings):
        inc = arcs.crossings[cid]
        sign = next(p.sign for p in d.passages if p.crossing == cid)
        row = [LaurentPoly.zero(TVAR) for _ in range(count)]
        ov, ui, uo = classes[inc.over_in], classes[inc.under_in], classes[inc.under_out]
        tt = t if sign > 0 else tinv
        row[uo] = row[uo] + one
        row[ui] = row[ui] - tt
        row[ov] = row[ov] - (one - tt)
        rows.append(tuple(row))
    matrix = PresentationMatrix("L1", tuple(col_names), tuple(rows))
    if d.kind == LONG:
        return OneVarModule(matrix, classes[0], classes[arcs.arc_count - 1])
    return OneVarModule(matrix, None, None)
