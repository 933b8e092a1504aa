# convexpoly - exact convex polygon and convex sequence toolkit

from convexpoly.verification.fuzz import (
    FuzzConfig, InstanceResult, VerificationReport, compare_verdicts, dump_instance,
    generate_instance, run_verification,
)
from convexpoly.verification.random import RandInt, RandomSampler, instance_rng
