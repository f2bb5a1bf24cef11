"""Cores, quotients and blocks.

Run: python3 demos/04_blocks_and_cores.py
"""

from collections import defaultdict

from fockspace import p_core_and_quotient, weight_label
from fockspace.partitions import Partition, format_partition, partitions_of, rim_hook_removals

lam = Partition([4, 4, 2, 1])
print("removing 3-rim hooks from", format_partition(lam))
for step in rim_hook_removals(lam, 3):
    print(f"  -> {format_partition(step.result)} (height {step.height})")
core, quotient = p_core_and_quotient(lam, 3)
print("3-core:", format_partition(core), " 3-quotient:", [format_partition(q) for q in quotient])

p = 3
n = 6
blocks = defaultdict(list)
for mu in partitions_of(n):
    blocks[weight_label(mu, p).vector()].append(mu)
print(f"\npartitions of {n} grouped by residue counts (p={p}):")
for label, members in sorted(blocks.items()):
    cores = {format_partition(p_core_and_quotient(m, p)[0]) for m in members}
    print(f"  {label}  core {'/'.join(sorted(cores))}:",
          " ".join(format_partition(m) for m in members))
