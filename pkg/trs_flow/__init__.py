"""
trs-flow: reduction of singular linear systems and vector fields along formal
invariant curves to Turrittin-Ramis-Sibuya form, with numeric asymptotic
trajectories.
"""
