"""Builders for both sides of every checked identity, plus the registry."""
from .registry import REGISTRY, IdentitySpec, VerifyReport, get_identity, verify, verify_named

__all__ = ["REGISTRY", "IdentitySpec", "VerifyReport", "get_identity", "verify", "verify_named"]
