# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

import ast
import os

AITKUNICASTPATH = None
QUIET = False
BUDGET = {}
DEFAULT_BUDGET = {
    "max_nodes": 12,
    "max_edges": 18,
    "max_enumeration": 200000,
    "max_code_edges": 16,
}


def get_aitk_search_paths():
    """
    Get the aitk.unicast search paths for network files
    """
    custom = os.environ.get("AITK_UNICAST_PATH", AITKUNICASTPATH)
    here = os.path.abspath(os.path.dirname(__file__))
    if custom is not None:
        if len(custom) > 0 and custom[-1] != "/":
            custom += "/"
        paths = [custom]
    else:
        paths = []
    paths += ["./", "./networks/", os.path.join(here, "networks/")]
    return paths


def set_aitk_path(path):
    """
    Set a custom search path for aitk.unicast network files
    """
    global AITKUNICASTPATH
    AITKUNICASTPATH = path


def setup_config():
    global QUIET, BUDGET

    QUIET = os.environ.get("AITK_UNICAST_QUIET", "").lower() in ["1", "true", "yes"]
    budget = os.environ.get("AITK_UNICAST_BUDGET", "")
    if budget:
        BUDGET = ast.literal_eval(budget)
        if not isinstance(BUDGET, dict):
            raise ValueError("AITK_UNICAST_BUDGET must be a dict: %r" % budget)
        unknown = set(BUDGET) - set(DEFAULT_BUDGET)
        if unknown:
            raise ValueError("unknown budget settings: %r" % sorted(unknown))
    else:
        BUDGET = {}


def set_quiet(quiet=True):
    global QUIET
    QUIET = quiet


def get_quiet(quiet=None):
    """
    Resolve a per-call quiet flag against the global setting.
    """
    if quiet is None:
        return QUIET
    return quiet


def get_budget_defaults():
    budget = DEFAULT_BUDGET.copy()
    budget.update(BUDGET)
    return budget
