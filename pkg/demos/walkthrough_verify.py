"""Run a small exhaustive verification and an open-question search, printing the reports."""

from bbdigraph.verify.harness import verify_theorem
from bbdigraph.verify.search import SearchTarget, open_problem_search

report = verify_theorem("hamil-1.6", 2)
print(report.to_text())

report = verify_theorem("bipart-1.5", 4, 2, mode="sampled", samples=2000, seed=3)
print(report.to_text())

search = open_problem_search(SearchTarget("open-d0", 2, mode="exhaustive"))
print(search.to_text())
print(search.statement)
