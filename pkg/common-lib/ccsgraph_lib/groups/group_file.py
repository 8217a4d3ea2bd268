"""
Reader for the group text format::

    # comment
    degree 4
    gen (1 2 3 4)
    gen (1 3)
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..exceptions import GroupFileError, PermutationError
from .permutation import Permutation, parse_permutation
from .permutation_group import PermutationGroup, generate_group


def parse_group_text(
    text: str, source: Optional[str] = None
) -> Tuple[int, List[Permutation]]:
    """Parse a group document into its degree and generators.

    Raises:
        GroupFileError: with the offending line number
    """
    degree: Optional[int] = None
    gens: List[Permutation] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()

        if keyword == "degree":
            if degree is not None:
                raise GroupFileError("duplicate 'degree' line", source, lineno)
            if gens:
                raise GroupFileError("'degree' must precede every 'gen' line", source, lineno)
            if not rest.isdigit() or int(rest) < 1:
                raise GroupFileError(f"invalid degree {rest!r}", source, lineno)
            degree = int(rest)
        elif keyword == "gen":
            if degree is None:
                raise GroupFileError("'gen' before 'degree'", source, lineno)
            try:
                gens.append(parse_permutation(rest, degree))
            except PermutationError as e:
                raise GroupFileError(str(e), source, lineno) from e
        else:
            raise GroupFileError(f"unknown keyword {keyword!r}", source, lineno)

    if degree is None:
        raise GroupFileError("missing 'degree' line", source)
    return degree, gens


def load_group_file(
    path: Union[str, Path], name: Optional[str] = None, order_cap: Optional[int] = None
) -> PermutationGroup:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise GroupFileError(f"cannot read group file: {e}", str(path)) from e
    degree, gens = parse_group_text(text, source=str(path))
    return generate_group(gens, degree=degree, order_cap=order_cap, name=name or path.stem)
