# # Smallest counterexamples
#
# Exhaustive search walks universes in order of size, then omega, then parent,
# then operands. The first failure it meets is the minimal one.

import json

from mtop import (Ambient, Identity, IdentitySpec, LhsVariant, SearchBounds,
                  replay_witness, search_min_counterexample)
from mtop.dsl import format_value
from mtop.dsl.printer import format_report

bounds = SearchBounds(max_elements=3, max_omega=4)

specs = [IdentitySpec(Identity.U1),
         IdentitySpec(Identity.I2),
         IdentitySpec(Identity.C3, LhsVariant.GLOBAL, Ambient.PHI_FULL)]

for spec in specs:
    w = search_min_counterexample(spec, bounds)
    operands = ", ".join(f"{k}={format_value(v)}" for k, v in w.msets.items() if v is not None)
    print(f"{spec.label():24} parent={format_value(w.parent)}  {operands}")


# With omega = 1 every mset is an ordinary set and nothing breaks.

print(search_min_counterexample(specs[0], SearchBounds(3, 1)))


# Witnesses serialize to JSON and replay without the search.

w = search_min_counterexample(specs[0], bounds)
blob = json.dumps(w.to_json())
print("replayed:", format_report(replay_witness(json.loads(blob))))
