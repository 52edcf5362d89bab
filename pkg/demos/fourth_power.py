"""The fourth power of the top slot element in the group algebra of S_4.

The slot elements X_k = sum of (i k) over i < k commute with each other,
and symmetric polynomials in them land in the centre.  A bare power of a
single slot element does not, but applying the transitivity operator T,
which keeps only the monomials whose transpositions connect all of
{1..n}, always restores centrality.  This script computes everything
explicitly for X_4^4 in S_4.

Run:  python3 demos/fourth_power.py
"""

from starfact.algebra import (
    evaluate,
    format_class_decomposition,
    jm_element,
    p,
    transitive_evaluate,
)
from starfact.factorisations import count_star
from starfact.perms import Partition, Permutation

n = 4
xi = jm_element(n, n)
fourth = xi ** 4

terms = " + ".join(str(Permutation(images)) for images in sorted(xi.terms))
print(f"X_4 = {terms}")
print()
print(f"X_4^4 has {fourth.support_size()} permutations in its support.")
print(f"coefficient of the identity: {fourth.coefficient(Permutation.identity(n))}")
print()

print("It is NOT central.  The witness pair:")
a, b = fourth.central_witness()
print(f"  coefficient {fourth.coefficient(a)} at {a} "
      f"but {fourth.coefficient(b)} at {b}, same class")
print()

three_cycles = sorted(
    (Permutation(images) for images in fourth.terms),
    key=str,
)
three_cycles = [w for w in three_cycles if w.cycle_type() == Partition((3, 1))]
print("The asymmetry is visible by eye: among 3-cycles the coefficient is")
for w in three_cycles:
    role = "moves 4" if w.apply(4) != 4 else "fixes 4"
    print(f"  {fourth.coefficient(w)} at {w} ({role})")
print()

print("Summing the slot powers symmetrises it.  p_4(X_2, X_3, X_4) is central:")
full = evaluate(p(4), n)
print(f"  p_4 = {format_class_decomposition(full.decompose())}")
print()

print("Applying T to p_4 strips the disconnected monomials, and what is")
print("left counts transitive walks:")
t4 = transitive_evaluate(p(4), n)
print(f"  T(p_4) = {format_class_decomposition(t4.decompose())}")
print()

print("Those coefficients are star factorisation counts.  A length-4 walk")
print("on a class [3,1] target has genus given by 4 = n + c - 2 + 2g, so")
print("g = 0, and likewise for [2,2]:")
for cycles in ([(1, 2, 3)], [(1, 2), (3, 4)]):
    w = Permutation.from_cycles(n, cycles)
    print(f"  count_star({w}, genus 0) = {count_star(w, 0, n)}"
          f"  vs coefficient {t4.coefficient(w)}")
