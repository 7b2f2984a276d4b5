""" __init__.py for proof_tracer """
from proof_tracer.decomposition import (Block, CosetDecomposition, coset_decompose,
                                        collapse_of, fiber_bound_holds)
from proof_tracer.construction import (ConstructionSets, CoverVerdict, build_construction_sets,
                                       quotient_cover_check, progression_hypothesis)
from proof_tracer.representation import (Representation, find_representation,
                                         iter_representations, fiber_cover)
from proof_tracer.certificate import (SpanCertificate, CertificateVerdict, certify_span,
                                      certify_direct, validate_certificate, write_certificate,
                                      read_certificate, sample_subsets, window_parameters)
