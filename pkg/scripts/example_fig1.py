"""Full analysis and certificate of the 5-vertex example 3-graph."""
from hyperq import CertifyConfig, SolverConfig, certify
from hyperq.generators import example_fig1
from hyperq.hgr import report_json

rep = certify(example_fig1(), SolverConfig(), CertifyConfig())
print(report_json(rep), end="")
print(f"verdict: {rep.verdict}, {rep.n_applicable} applicable, {len(rep.violations)} violated")
