from cambrian.coxeter import (CoxeterSystem, bounded_join, bounded_meet, enumerate_elements,
                              inversion_set, is_finite, left_descents, longest_element,
                              multiply, reduced_words, restrict, right_descents, weak_leq)
from cambrian.notation import load_system, parse_gamma, parse_word
from cambrian.semilattice import build_cambrian, cambrian_join, cambrian_meet, interval, is_nuclear
from cambrian.shelling import (analyse_interval, el_check, homotopy_type, label_edge,
                               maximal_chains, mobius_chains, mobius_recursive)
from cambrian.sortable import (CoxeterElementWord, alpha_positions, congruence_fibers,
                               enumerate_sortables, is_sortable_blocks, pi_down, sorting_word)
