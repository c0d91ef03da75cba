# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

from ._version import __version__  # noqa: F401
from .aset import a_set, a_set_by_deletion, chain_decomposition  # noqa: F401
from .coding import LinearCode, extend_code, template_code, validate_code  # noqa: F401
from .config import set_aitk_path, set_quiet, setup_config  # noqa: F401
from .flow import max_flow, min_cut  # noqa: F401
from .generator import GenSpec, generate  # noqa: F401
from .graph import (  # noqa: F401
    Path,
    UnicastInstance,
    augment,
    strip_information_edges,
    validate_and_build,
)
from .netfile import parse_instance, read_instance  # noqa: F401
from .solvability import decide, decide_by_asets, verify_certificate  # noqa: F401
from .templates import get_template  # noqa: F401
from .utils import load_network  # noqa: F401
from .witness import find_embedding, verify_embedding  # noqa: F401

setup_config()  # checks os.environ
