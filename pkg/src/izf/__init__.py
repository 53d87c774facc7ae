"""Proof-checker kernel and normalization engine for an intuitionistic set
theory with inaccessible sets: typed proof terms, a lazy reduction machine,
content extraction, and a finite realizability model."""

__version__ = "0.1.0"
