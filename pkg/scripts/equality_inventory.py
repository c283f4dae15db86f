"""Which records are attained with equality on each regular test hypergraph."""
from hyperq import CertifyConfig, SolverConfig, certify
from hyperq.corpora import regular_corpus

for i, H in enumerate(regular_corpus()):
    rep = certify(H, SolverConfig(), CertifyConfig())
    tight = [b.id for b in rep.bounds if b.applicable and b.equality_note]
    bad = [b.id for b in rep.bounds if b.holds is False]
    r = rep.params.Delta
    line = f"#{i:2d} n={H.n:2d} k={H.k} r={r:2d}  tight: {' '.join(tight)}"
    print(line + (f"  VIOLATED: {' '.join(bad)}" if bad else ""))
