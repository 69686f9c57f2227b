import platform
import timeit

n = 3

t = timeit.timeit("cambrian.build_cambrian(cambrian.parse_gamma(B3), 9)",
                  setup="import cambrian; B3 = cambrian.load_system('B3')", number=n)

s = timeit.timeit("cambrian.report.analyse_poset(P)",
                  setup="import cambrian, cambrian.report; H3 = cambrian.load_system('H3'); "
                        "P = cambrian.build_cambrian(cambrian.parse_gamma(H3), 15)", number=n)

print("Cambrian bench mark running under {} {} on {}".format(
      platform.python_implementation(), platform.python_version(), platform.platform()))
print("build B3:   {:.3g} s per call".format(t / n))
print("analyse H3: {:.3g} s per call".format(s / n))
