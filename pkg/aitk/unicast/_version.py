# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

version_info = (0, 1, 0)
__version__ = ".".join(map(str, version_info))
