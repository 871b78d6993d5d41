"""Run the fast check suites and print their one-line summaries."""

from hadwiger7.lemmas import cockade_edges, dichotomy8, ramsey33

if __name__ == "__main__":
    for report in (ramsey33(), dichotomy8(), cockade_edges(count=50)):
        print(f"{report['suite']:<14} {report['summary']}")
