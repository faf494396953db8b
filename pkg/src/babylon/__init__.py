"""The Babylonian graph: integers joined when they are the legs of a Pythagorean triple."""

__version__ = "0.1.0"
