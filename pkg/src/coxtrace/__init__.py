"""Geodesics, shortlex normal forms and trace rewriting in Coxeter
groups, graph groups and free partially commutative inverse monoids."""

from .cyclotomic import (ArithmeticFault, CyclotomicElement, cyc_add,
                         cyc_is_zero_at_zeta, cyc_mul, cyc_sign_real,
                         crr_reconstruct, cyclotomic_polynomial)
from .coxeter import (GeoMatrix, geodesic_alphabet, geodesic_length, parikh_even,
                      sigma_apply, sigma_generator, sign_of_coefficient)
from .fim import MunnSet, fim_equal, munn_set
from .groupspec import (ExtendedIndependence, GroupSpec, KindMismatch, Letter,
                        SpecError, Word, WordError, extend_independence,
                        parse_group_spec, parse_word, render_group_spec)
from .kernels import backend_name
from .oracle import (GeodesicTable, geodesic_table, oracle_equal, oracle_length,
                     oracle_shortlex, swap_cancel_closure, tits_closure)
from .racg import (a_short_pass, embed_phi, normal_form_alphabet, racg_sigma_apply,
                   shortlex_graph_group, shortlex_racg)
from .rewriting import (TraceRewritingSystem, inverse_cancellation_system,
                        is_irreducible, reduce, square_cancellation_system)
from .traces import (DependenceGraph, IndepAlphabet, Trace, dependence_graph,
                     gamma_alphabet, hasse_diagram, is_prime, lex_normal_form,
                     prime_prefixes, sigma_alphabet, trace_alphabet,
                     trace_from_word)

__version__ = "0.1.0"
