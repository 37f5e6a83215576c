from dataclasses import dataclass
from typing import Iterator, Literal, Protocol

from outerstring_mis.errors import ParseError


class RecordToken(Protocol):
    type: Literal["header", "record"]
    line_no: int


@dataclass
class Header(RecordToken):
    kind: str
    count: int
    extra: tuple[int, ...]
    line_no: int
    type: Literal["header"] = "header"  # type: ignore


@dataclass
class Record(RecordToken):
    id: str
    fields: tuple[str, ...]
    line_no: int
    type: Literal["record"] = "record"  # type: ignore

    def ints(self, start: int = 0) -> tuple[int, ...]:
        return to_ints(self.fields[start:], self.line_no)


def to_ints(fields, line_no: int) -> tuple[int, ...]:
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise ParseError(f"expected decimal integers, got {' '.join(fields)!r}", line_no) from None


def tokenize_representation(text: str) -> Iterator[RecordToken]:
    """
    Tokenize the line-oriented representation formats.

    Key elements:
    - `#` starts a comment running to the end of the line
    - blank lines are skipped
    - the first remaining line is the header `<kind> <n> [extra ints]`
    - every following line is a record `<id> <field> <field> ...`

    Args:
        text: File contents

    Returns:
        Iterator yielding one Header followed by Record tokens
    """
    seen_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()

        if not seen_header:
            if len(fields) < 2:
                raise ParseError("header must be '<kind> <n>'", line_no)
            numbers = to_ints(fields[1:], line_no)
            yield Header(fields[0], numbers[0], numbers[1:], line_no)
            seen_header = True
            continue

        if len(fields) < 2:
            raise ParseError(f"record {fields[0]!r} has no values", line_no)
        yield Record(fields[0], tuple(fields[1:]), line_no)

    if not seen_header:
        raise ParseError("empty input: missing header")
