"""Finite enriched category theory around relative monads."""
