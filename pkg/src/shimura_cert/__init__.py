"""Certify the graph-theoretic hypotheses behind rational-point results on X^{pq}/w_q."""

__version__ = "0.1.0"
