"""Choose between a handful of mounting sites for an immovable surface.

Deployments rarely get to slide the surface along the street; walls, poles
and permits fix a few candidate spots. Each candidate pins the placement and
possibly its own offset and height; the selector evaluates the closed form at
every site and keeps the feasible one with the best SNR.

The CLI equivalent reads the same data from a sites file:
    risharvest select-site --config configs/default.cfg \
        --sites configs/sites_example.cfg
"""

from dataclasses import replace

from risharvest import SiteCandidate, default_scenario, select_site

base = default_scenario()

candidates = [
    # far down the street at the stock offset and height
    SiteCandidate(scenario=base, r1h_m=10.0),
    # close to the TX, same wall
    SiteCandidate(scenario=base, r1h_m=2.0),
    # close to the TX on the opposite, wider side, mounted lower
    SiteCandidate(
        scenario=replace(base, lateral_offset_m=12.0, ris_height_m=9.0),
        r1h_m=2.0,
    ),
]

selection = select_site(candidates)

for idx, (cand, sol) in enumerate(zip(candidates, selection.solutions)):
    marker = " <- selected" if idx == selection.best_index else ""
    if sol.feasible:
        print(
            f"site {idx}: r1h = {cand.r1h_m:5.1f} m, "
            f"y_s = {cand.scenario.lateral_offset_m:4.1f} m, "
            f"h_s = {cand.scenario.ris_height_m:4.1f} m -> "
            f"{sol.snr_opt_db:6.2f} dB{marker}"
        )
    else:
        print(
            f"site {idx}: r1h = {cand.r1h_m:5.1f} m, "
            f"y_s = {cand.scenario.lateral_offset_m:4.1f} m, "
            f"h_s = {cand.scenario.ris_height_m:4.1f} m -> infeasible{marker}"
        )

print()
print("site 2 wins despite the wider street: mounting lower shortens both")
print("hops enough to beat the nearer-wall candidates.")

# power-hungrier chips knock out sites one by one; the selector degrades
# gracefully and reports when nothing can self-power
hungry = select_site(candidates, p_ris_w=0.08)
print()
print("at an 80 mW draw the feasible set shrinks to:",
      [i for i, s in enumerate(hungry.solutions) if s.feasible],
      "- best is", hungry.best_index)
