"""
Verification reports
====================

Every suite returns a report that serializes to JSON and can be replayed.
"""

from thinhom.harness import Corpus, VerificationReport, replay, suite_adjunction, suite_product_preservation

r = suite_adjunction("T3", Corpus("exhaustive-graphs", 3))
print(r.format_text())

# the Cartesian product is not preserved by delta: a failure we expect
bad = suite_product_preservation("delta", Corpus("exhaustive-digraphs", 2), product="box", expect="FAIL")
print(bad.format_text())
print(bad.counterexamples[0])

# counterexamples survive a round trip through JSON
restored = VerificationReport.from_json(bad.to_json())
print("replayed:", replay(restored))
