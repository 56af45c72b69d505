"""Invariance groups generated by affine parameter substitutions.

Composition convention: ``compose(f, g)`` applies ``g`` first.  Group tables
are indexed ``table[i][j] = index(compose(elements[i], elements[j]))``; the
other convention gives the transposed table and the same element set.
"""

from dataclasses import dataclass

from .affine import AffineMap, compose
from .catalog import FAMILIES, NAMED, PERMUTATIONS2, PERMUTATIONS3, Verdict

__all__ = [
    "GroupTable",
    "ClosureCapExceeded",
    "UnsupportedOrder",
    "compose",
    "generate_group",
    "element_orders",
    "classify_group",
    "family_group",
    "symmetric_permutations",
    "verify_reparameterization",
    "format_group",
]


class ClosureCapExceeded(RuntimeError):
    pass


class UnsupportedOrder(ValueError):
    pass


@dataclass
class GroupTable:
    elements: list
    table: list
    orders: list

    def __len__(self):
        return len(self.elements)

    def index(self, f):
        return self.elements.index(f)

    def is_latin_square(self):
        k = len(self.elements)
        full = set(range(k))
        rows = all(set(row) == full for row in self.table)
        cols = all({self.table[i][j] for i in range(k)} == full for j in range(k))
        return rows and cols

    def is_abelian(self):
        k = len(self.elements)
        return all(self.table[i][j] == self.table[j][i] for i in range(k) for j in range(k))

    def reordered(self, reference):
        """Same group with elements listed in the order of ``reference``."""
        if len(reference) != len(self.elements) or set(reference) != set(self.elements):
            raise ValueError("reference maps are not the group's element set")
        return _table(list(reference))


def _order(f, identity, cap):
    g = f
    for k in range(1, cap + 1):
        if g == identity:
            return k
        g = compose(f, g)
    raise ClosureCapExceeded(f"element order exceeds {cap}")


def _table(elements):
    index = {f: i for i, f in enumerate(elements)}
    table = []
    for f in elements:
        row = []
        for g in elements:
            h = compose(f, g)
            if h not in index:
                raise ValueError("element set is not closed under composition")
            row.append(index[h])
        table.append(row)
    identity = AffineMap.identity(elements[0].inputs)
    orders = [_order(f, identity, len(elements)) for f in elements]
    return GroupTable(elements, table, orders)


def generate_group(generators, cap=64):
    """Closure of ``generators`` under composition, identity first, BFS order."""
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    for g in generators:
        if not g.is_square():
            raise ValueError("generators must map a parameter tuple to itself")
    identity = AffineMap.identity(generators[0].inputs)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for f in frontier:
            for g in generators:
                h = compose(g, f)
                if h not in seen:
                    if len(elements) >= cap:
                        raise ClosureCapExceeded(f"more than {cap} elements")
                    seen.add(h)
                    elements.append(h)
                    nxt.append(h)
        frontier = nxt
    return _table(elements)


def element_orders(g):
    return list(g.orders)


def classify_group(g):
    """'trivial', 'S2' or 'S3' (or 'Z6' for an abelian group of order 6)."""
    k = len(g)
    if k == 1:
        return "trivial"
    if k == 2:
        return "S2"
    if k == 6:
        # the only groups of order 6 are Z6 and S3; S3 is the non-abelian one
        return "Z6" if g.is_abelian() else "S3"
    raise UnsupportedOrder(f"order {k} is not one of 1, 2, 6")


def family_group(family):
    """Group generated by a family's two relations, listed in catalog order."""
    fam = FAMILIES[family]
    return generate_group(fam.generators).reordered(fam.listed)


def symmetric_permutations(symmetric):
    fn = NAMED[symmetric]
    orders = PERMUTATIONS3 if fn.arity == 3 else PERMUTATIONS2
    return [AffineMap.permutation(fn.params, order) for order in orders]


def verify_reparameterization(base, symmetric, sigma):
    """Check ``rho o sigma == phi o rho`` as affine maps.

    ``rho`` is the reparameterization of ``base`` by ``symmetric``; ``sigma`` is
    a permutation (index tuple or AffineMap) of the symmetric arguments and
    ``phi`` the invariance listed at the same position in ``base``'s family.
    """
    fn = NAMED[symmetric]
    if fn.base != base:
        raise ValueError(f"{symmetric} is not a reparameterization of {base}")
    fam = next(f for f in FAMILIES.values() if f.function == base)
    perms = symmetric_permutations(symmetric)
    if not isinstance(sigma, AffineMap):
        sigma = AffineMap.permutation(fn.params, sigma)
    pos = perms.index(sigma)
    phi = fam.listed[pos]
    rho = fn.reparam
    lhs, rhs = compose(rho, sigma), compose(phi, rho)
    return Verdict("holds" if lhs == rhs else "fails", lhs, rhs, id=f"{symmetric}->{base}")


def format_group(family):
    """Text certificate: elements, multiplication table, orders, label."""
    g = family_group(family)
    lines = [f"family {family}: order {len(g)}, {classify_group(g)}"]
    for i, f in enumerate(g.elements):
        lines.append(f"  g{i + 1}: {f}   order {g.orders[i]}")
    width = len(str(len(g)))
    header = " " * (width + 4) + " ".join(f"g{j + 1}".rjust(width + 1) for j in range(len(g)))
    lines.append("table (row o column):")
    lines.append(header)
    for i, row in enumerate(g.table):
        lines.append(f"  g{i + 1}".ljust(width + 3) + " " + " ".join(f"g{j + 1}".rjust(width + 1) for j in row))
    lines.append("orders: " + " ".join(map(str, g.orders)))
    return "\n".join(lines)


def group_certificate(family):
    g = family_group(family)
    return {
        "family": family,
        "order": len(g),
        "label": classify_group(g),
        "elements": [str(f) for f in g.elements],
        "table": [[j + 1 for j in row] for row in g.table],
        "orders": g.orders,
    }
