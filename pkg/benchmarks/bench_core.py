"""Wall-clock timings of the hot paths: python benchmarks/bench_core.py"""
import time

from tiealg import hyperoct, relations
from tiealg.rewrite import engine, mul_reduced, structure_constants
from tiealg.words import Element


def timed(label, fn, repeat=1):
    start = time.perf_counter()
    for _ in range(repeat):
        fn()
    per = (time.perf_counter() - start) / repeat
    print(f"{label:<44} {per * 1000:9.2f} ms")


def main():
    timed("completion + engine n=3", lambda: engine(3))
    timed("completion + engine n=4", lambda: engine(4))
    a = Element.parse("T1 E2 T1^-1 T2 + u*E1 T2 T1", 3)
    b = Element.parse("T2 T1 E2 - (u-1)*T1^-1", 3)
    timed("mul_reduced n=3 (warm)", lambda: mul_reduced(a, b), repeat=200)
    timed("structure constants n=3", lambda: structure_constants(3))
    words = engine(4).normal_words
    timed("n=4 image rank (360 x 432)",
          lambda: hyperoct.image_rank(words, 4, ("phi0", "phi1", "psi")), repeat=5)
    timed("check suite n=4", lambda: relations.check_suite(4, "all"))
    timed("irreps E_3(1)", lambda: hyperoct.irreps_E3())


if __name__ == "__main__":
    main()
