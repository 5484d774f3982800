"""Random instance generation, golden examples, property suites and reports."""

from .generate import InstanceSpec, generate_random_ad, random_ad, random_pd, trial_rng
from .io import read_matrix, write_matrix
from .registry import PAPER_EXAMPLES
from .report import PropertyReport
from .suites import SUITE_NAMES, SUITES, replay, run_suite
