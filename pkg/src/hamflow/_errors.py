# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.


class HamflowError(Exception):
    """Base class for every error raised deliberately by this package."""


class DataError(HamflowError, ValueError):
    """
    The input data is malformed or violates an operation's precondition:
    unreadable images, mismatched dimensions, one-class training sets and the like.
    """


class NumericError(HamflowError, ArithmeticError):
    """
    The requested quantity is numerically undefined for the given input, e.g. the
    orientation of a zero-area polygon or an index around a contour through a stationary point.
    """
