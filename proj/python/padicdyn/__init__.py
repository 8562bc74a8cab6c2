"""Certified p-adic Green functions and Montel equicontinuity certificates.

Thin convenience layer over the compiled _core module: rationals travel as
strings ("a/b" or "a"), compound results as parsed JSON documents.
"""

import json

from padicdyn import _core
from padicdyn._core import (
    PrecisionExhausted,
    TaskParseError,
    big_norm_exp,
    chordal,
    escape_radius_exp,
    eval_poly,
    vp,
)

__all__ = [
    "PrecisionExhausted",
    "TaskParseError",
    "big_norm_exp",
    "certify",
    "chordal",
    "escape_radius_exp",
    "eval_poly",
    "green_value",
    "image_disk",
    "orbit_disks",
    "run_tasks",
    "verify_certificate",
    "vp",
]


def green_value(coefficients, p, point, epsilon, precision=64):
    return json.loads(_core.green_value(coefficients, p, point, epsilon, precision))


def image_disk(coefficients, p, center, radius_exp):
    return json.loads(_core.image_disk(coefficients, p, center, radius_exp))


def orbit_disks(coefficients, p, center, radius_exp, budget):
    return json.loads(_core.orbit_disks(coefficients, p, center, radius_exp, budget))


def certify(coefficients, p, center, radius_exp, alpha="0", budget=256):
    return json.loads(_core.certify(coefficients, p, center, radius_exp, alpha, budget))


def verify_certificate(certificate, coefficients, p):
    return _core.verify_certificate(json.dumps(certificate), coefficients, p)


def run_tasks(task_document, jobs=1, retry_precision=False):
    if not isinstance(task_document, str):
        task_document = json.dumps(task_document)
    rendered, any_error = _core.run_tasks(task_document, jobs, retry_precision)
    return json.loads(rendered), any_error
