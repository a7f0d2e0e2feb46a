# Licensed under the GPLv3 License: https://www.gnu.org/licenses/gpl-3.0.html
# For details: README.md#license

"""ncpi is a toolkit for non-commutative polynomial identities:
matrix identities, arithmetic circuits, generation certificates, tensors and algebraic proofs.
"""

__version__ = "0.1.0"
