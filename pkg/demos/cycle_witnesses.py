"""
Spectra, witnesses, and bypasses
================================

The cycle engine answers three kinds of question: which lengths occur,
an explicit cycle for each length, and how a cycle can be shortcut
through outside vertices.  This script runs all three on the named
families where the answers are known in advance.
"""

from bipancyclic import (
    complete_bipartite,
    cycle_spectrum,
    d6,
    d6_prime,
    d8,
    directed_cycle,
    find_bypass,
    find_cycle_of_length,
    longest_non_hamiltonian_cycle,
)

# the complete balanced bipartite digraph hits every even length
K = complete_bipartite(4)
spectrum = cycle_spectrum(K)
print("complete bipartite, a=4")
print("  lengths:", spectrum.lengths())
print("  even pancyclic:", spectrum.is_even_pancyclic())
for m, cycle in spectrum.witnesses:
    print(f"  length {m}: {cycle}")
print()

# a directed cycle has exactly one cycle: itself
C = directed_cycle(5)
print("directed cycle, a=5")
print("  lengths:", cycle_spectrum(C).lengths())
print("  longest below full order:", longest_non_hamiltonian_cycle(C))
print()

# the six-vertex pair are general digraphs: odd lengths allowed
for name, D in (("D_6", d6()), ("D'_6", d6_prime())):
    print(name)
    print("  lengths:", cycle_spectrum(D).lengths())
    print("  5-cycle:", find_cycle_of_length(D, 5))
print()

# a bypass leaves a cycle, wanders outside, and re-enters further along;
# the gap counts the hops of cycle skipped.  On the 8-vertex exception
# the longest non-Hamiltonian cycle admits one through the two weak
# vertices.
D = d8()
host = longest_non_hamiltonian_cycle(D)
print("8-vertex exception")
print("  host cycle:", host)
bypass = find_bypass(D, host)
print("  bypass:", bypass)
print("  (the interior vertex is one of the two the cycle skips)")
