"""Character scanner shared by the type, formula, and set-formula readers."""

from __future__ import annotations

PRIMES = ("'", "′")
_DELIMS = set("()") | {" ", "\t", "\n", "\r"}


class ParseError(ValueError):
    """Raised on malformed input; ``offset`` is a 0-based character index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def expect(self, ch: str) -> None:
        got = self.peek()
        if got != ch:
            what = repr(got) if got else "end of input"
            raise self.error(f"expected {ch!r}, got {what}")
        self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def symbol(self) -> str:
        """Read a maximal run of non-delimiter characters."""
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in _DELIMS:
            self.pos += 1
        if start == self.pos:
            got = self.text[self.pos] if self.pos < len(self.text) else ""
            raise self.error(f"expected a symbol, got {got!r}" if got else "unexpected end of input")
        return self.text[start:self.pos]

    def keyword(self, *choices: str) -> str:
        start = self.pos
        word = self.symbol()
        if choices and word not in choices:
            self.pos = start
            self.skip_ws()
            raise self.error(f"expected one of {', '.join(choices)}, got {word!r}")
        return word

    def finish(self) -> None:
        if not self.at_end():
            raise self.error("trailing input")
