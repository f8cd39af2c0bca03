"""Integral lattice bookkeeping for the tangent-cluster quadratic forms.

The rank-(n+2) lattice Ap(n) has Gram matrix with unit diagonal and
off-diagonal -1.  This script checks, with exact arithmetic:

* discriminant groups (Z/2)^n + Z/2n via Smith normal form;
* the basis change exhibiting Ap(n) as <1> + U(2) + A_{n-1}(2);
* the even sublattice (index 2, determinant times 4);
* the integralized dual Ap(n)^perp = Ap(n)^dual(2n) with Gram
  cir(n-1, -1, ..., -1), self-dual at n = 2;
* the dual root lattice block with corner entries (n, n-1).
"""

from packlab import (
    discriminant_group,
    dual_exponent,
    dual_gram,
    even_sublattice,
    from_catalog,
    gram_in_basis,
    rescale,
)
from packlab import exact
from packlab.lattices import QuadraticLattice

for n in range(2, 6):
    lat = from_catalog(f"Ap{n}")
    group = discriminant_group(lat)
    print(f"Ap({n}): det {lat.det}, discriminant {group}, dual exponent {dual_exponent(lat)}")

ap4 = from_catalog("Ap4")
cols = [
    [1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [-1, 0, -1, 0, 0, 0],
    [1, 1, 1, -1, 0, 0],
    [0, 0, 0, 1, -1, 0],
    [0, 0, 0, 0, 1, -1],
]
block = gram_in_basis(ap4, exact.transpose(exact.mat(cols)))
print("\nAp(4) in the split basis (<1> + U(2) + A3(2) blocks):")
for row in block:
    print("  ", [int(x) for x in row])

ev = even_sublattice(from_catalog("Ap2"))
print("\neven sublattice of Ap(2): det", ev.det, "(index 2, 4x determinant)")
print("discriminant:", discriminant_group(ev))

perp = rescale(QuadraticLattice(dual_gram(from_catalog("Ap2"))), 4)
print("\nintegralized dual of Ap(2) equals Ap(2):", perp.gram == from_catalog("Ap2").gram)

for n in (3, 5):
    lat = from_catalog(f"A{n - 1}v({n})")
    cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n - 1)]
              for i in range(n - 1)]
    basis_cols = [list(cartan[i]) for i in range(1, n - 1)]
    beta = [0] * (n - 1)
    beta[n - 2] = 1
    basis_cols.append(beta)
    g = gram_in_basis(lat, exact.transpose(exact.mat(basis_cols)))
    print(f"\nA{n - 1}^dual({n}) in the (alpha_2.., beta) basis:")
    for row in g:
        print("  ", [int(x) for x in row])
