"""Skew polynomial algebras over p-adic and power series rings, their cyclic
codes, Construction A lattices and rank-metric checks.

The pipeline functions take and return plain dicts; configs use the same
schema as the ``skewlat`` command-line tool.
"""

import json

from ._skewlat import SkewlatError, Tower
from ._skewlat import codewords_csv as _codewords_csv
from ._skewlat import config_hash as _config_hash
from ._skewlat import run as _run
from ._skewlat import verify as _verify

__all__ = ["SkewlatError", "Tower", "run", "verify", "config_hash", "codewords_csv"]


def run(command, config):
    """Run ``command`` (tower, algebra, codes, lift, mrd) and return the artifact."""
    return json.loads(_run(command, json.dumps(config)))


def verify(artifact):
    """Recompute an artifact from its embedded config and compare."""
    return json.loads(_verify(json.dumps(artifact)))


def config_hash(config):
    return _config_hash(json.dumps(config))


def codewords_csv(config):
    return _codewords_csv(json.dumps(config))
