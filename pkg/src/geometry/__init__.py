#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from .points import Point
from .points import PointSet
from .points import Inequality
from .points import linf_radius
from .hull import FacetList
from .hull import convex_hull_facets
from .hull import segment_hits_hull
from .hull import integer_points_in_hull
from .hull import hulls_intersect
from .hull import in_convex_hull
from .lattice import bounding_box
from .lattice import is_lattice_convex
from .lattice import l1_neighborhood

__all__ = [
    'Point',
    'PointSet',
    'Inequality',
    'linf_radius',
    'FacetList',
    'convex_hull_facets',
    'segment_hits_hull',
    'integer_points_in_hull',
    'hulls_intersect',
    'in_convex_hull',
    'bounding_box',
    'is_lattice_convex',
    'l1_neighborhood'
]
