"""
Rainbow matching toolkit
Exact solvers, constructive algorithms, extremal generators and verification
campaigns for rainbow matchings in (partite) uniform hypergraphs
"""

__version__ = "1.0.0"
