"""Degree-0 homology (cord algebra) presentations and tame simplification.

The presentation has generators a_ij (i != j) and the 2n^2 relations given
by the entries of PsiL.A and A.PsiR.  Simplification repeatedly eliminates
a generator that occurs linearly with a unit coefficient and nowhere else
in the same relation; this never changes the quotient algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dga import build_matrices
from .ncalg import NCPoly, nc_unit_normalize


@dataclass
class Presentation:
    generators: list
    relations: list
    substitution_log: list = field(default_factory=list)

    def __str__(self):
        lines = ["generators: " + ", ".join(g.name() for g in self.generators)]
        for rel in self.relations:
            lines.append("  0 = %s" % rel)
        return "\n".join(lines)


def extract_presentation(cd):
    """All a_ij with the 2n^2 entries of PsiL.A and A.PsiR as relations."""
    n = cd.n
    mats = build_matrices(cd)
    rel_l = mats["psi_l"] * mats["A"]
    rel_r = mats["A"] * mats["psi_r"]
    relations = []
    for m in (rel_l, rel_r):
        for i in range(n):
            for j in range(n):
                relations.append(m[i, j])
    gens = sorted({g for rel in relations for g in rel.generators()})
    return Presentation(generators=gens, relations=relations)


def _unit_linear_occurrence(rel, gens_order):
    """Find (g, unit_coeff) with rel = u*g + w, u a unit, g not in w."""
    for g in gens_order:
        coeff = rel.terms.get((g,))
        if coeff is None or not coeff.is_ring_unit():
            continue
        if any(g in w for w, _ in rel.terms.items() if w != (g,)):
            continue
        return g, coeff
    return None


def _dedupe(relations):
    """Drop zero relations and unit-multiple duplicates (deterministic)."""
    seen = set()
    out = []
    for rel in relations:
        if not rel:
            continue
        key = nc_unit_normalize(rel)
        if key in seen:
            continue
        seen.add(key)
        out.append(rel)
    return out


def _replacement_cost(repl):
    """Simpler replacements first: substituting a long word for a letter
    can turn a still-linear relation nonlinear and block later steps."""
    if not repl:
        return (0, 0)
    return (max(len(w) for w in repl.terms), len(repl.terms))


# Substituting words longer than this for a generator tends to blow up
# the surviving relations without reducing the quotient any further.
MAX_REPLACEMENT_WORD = 2


def simplify(pres):
    """Eliminate unit-coefficient linear generators until a fixpoint.

    Two phases: first only eliminations whose replacement words stay
    short (these keep other relations linear and the intermediate objects
    small), then the remaining ones without the length cap."""
    relations = list(pres.relations)
    log = list(pres.substitution_log)
    alive = sorted(set(pres.generators))
    for cap in (MAX_REPLACEMENT_WORD, None):
        changed = True
        while changed:
            changed = False
            best = None
            for idx, rel in enumerate(relations):
                if not rel:
                    continue
                hit = _unit_linear_occurrence(rel, alive)
                if hit is None:
                    continue
                g, u = hit
                w = rel - NCPoly.gen(g, u)
                replacement = w * (-u.inverse_unit())
                cost = _replacement_cost(replacement)
                if cap is not None and cost[0] > cap:
                    continue
                key = cost + (idx, g)
                if best is None or key < best[0]:
                    best = (key, idx, g, replacement)
            if best is not None:
                _, idx, g, replacement = best
                relations = [NCPoly.zero() if k == idx else
                             (r.substitute(g, replacement)
                              if g in r.generators() else r)
                             for k, r in enumerate(relations)]
                log.append((g, replacement))
                alive = [h for h in alive if h != g]
                changed = True
            relations = _dedupe(relations)
    return Presentation(generators=list(alive), relations=relations,
                        substitution_log=log)


def replay_log(pres, target):
    """Express an original generator in terms of the surviving ones."""
    expr = NCPoly.gen(target)
    for g, replacement in pres.substitution_log:
        expr = expr.substitute(g, replacement)
    return expr
