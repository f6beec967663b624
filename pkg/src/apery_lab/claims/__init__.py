"""Claim registry, sweeps, reports and searches."""
