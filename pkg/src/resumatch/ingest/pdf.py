"""Minimal block extractor for digitally generated, text-based PDFs.

Covers the subset of PDF that resume generators and office exporters
produce: Flate/ASCII85-encoded content streams, standard Type 1 fonts
with WinAnsi-style byte encodings, and the common text-positioning
operators. Glyph advances come from bundled standard-14 metrics or the
font's own /Widths array, so positions and estimated extents are good
enough for layout analysis. Scanned, encrypted or exotic PDFs are out of
scope and surface as MalformedDocument / no blocks.
"""

import base64
import json
import logging
import re
import zlib
from dataclasses import dataclass
from importlib import resources

from ..errors import MalformedDocument
from .blocks import TextBlock

logger = logging.getLogger(__name__)

_WHITESPACE = b"\x00\t\n\x0c\r "
_DELIMITERS = b"()<>[]{}/%"

_LINE_TOLERANCE = 2.0  # baselines within this many points share a line
_DEFAULT_WIDTH = 500  # per mille, used when a glyph width is unknown


def _load_font_metrics() -> dict:
    data = resources.files("resumatch.data").joinpath("font_widths.json").read_text("utf-8")
    return json.loads(data)


_FONT_METRICS = _load_font_metrics()
_FALLBACK_FONT = "Helvetica"


class _Name(str):
    """PDF name object; distinct from literal strings."""


@dataclass(frozen=True)
class _Ref:
    num: int
    gen: int


class _Keyword(str):
    """Bare keyword token (operators, true/false/null handled separately)."""


class _Lexer:
    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos

    def eof(self) -> bool:
        return self.pos >= len(self.data)

    def skip_whitespace(self) -> None:
        data = self.data
        while self.pos < len(data):
            b = data[self.pos]
            if b in _WHITESPACE:
                self.pos += 1
            elif b == 0x25:  # '%' comment to end of line
                while self.pos < len(data) and data[self.pos] not in (0x0A, 0x0D):
                    self.pos += 1
            else:
                return

    def _read_regular(self) -> bytes:
        start = self.pos
        data = self.data
        while self.pos < len(data) and data[self.pos] not in _WHITESPACE and data[self.pos] not in _DELIMITERS:
            self.pos += 1
        return data[start : self.pos]

    def next_token(self):
        """Return the next token: value object, _Keyword, or None at EOF."""
        self.skip_whitespace()
        if self.eof():
            return None
        data = self.data
        b = data[self.pos]
        if b == 0x3C:  # '<'
            if data[self.pos : self.pos + 2] == b"<<":
                self.pos += 2
                return _Keyword("<<")
            return self._read_hex_string()
        if b == 0x3E and data[self.pos : self.pos + 2] == b">>":
            self.pos += 2
            return _Keyword(">>")
        if b == 0x5B:  # '['
            self.pos += 1
            return _Keyword("[")
        if b == 0x5D:  # ']'
            self.pos += 1
            return _Keyword("]")
        if b == 0x28:  # '('
            return self._read_literal_string()
        if b == 0x2F:  # '/'
            self.pos += 1
            raw = self._read_regular()
            return _Name(_decode_name(raw))
        if b in b"+-.0123456789":
            raw = self._read_regular()
            try:
                if b"." in raw:
                    return float(raw)
                return int(raw)
            except ValueError:
                return _Keyword(raw.decode("latin-1"))
        if b in b"{}":
            self.pos += 1
            return _Keyword(chr(b))
        raw = self._read_regular()
        if not raw:  # unknown delimiter; skip one byte to make progress
            self.pos += 1
            return _Keyword(chr(b))
        return _Keyword(raw.decode("latin-1"))

    def _read_hex_string(self) -> bytes:
        end = self.data.find(b">", self.pos + 1)
        if end < 0:
            raise MalformedDocument("unterminated hex string")
        digits = re.sub(rb"\s", b"", self.data[self.pos + 1 : end])
        self.pos = end + 1
        if len(digits) % 2:
            digits += b"0"
        try:
            return bytes.fromhex(digits.decode("ascii"))
        except ValueError as exc:
            raise MalformedDocument("invalid hex string") from exc

    def _read_literal_string(self) -> bytes:
        data = self.data
        pos = self.pos + 1
        depth = 1
        out = bytearray()
        while pos < len(data):
            b = data[pos]
            if b == 0x5C:  # backslash escape
                pos += 1
                if pos >= len(data):
                    break
                e = data[pos]
                if e in b"nrtbf":
                    out.append({0x6E: 10, 0x72: 13, 0x74: 9, 0x62: 8, 0x66: 12}[e])
                    pos += 1
                elif e in b"()\\":
                    out.append(e)
                    pos += 1
                elif e in b"01234567":
                    octal = bytearray()
                    while pos < len(data) and len(octal) < 3 and data[pos] in b"01234567":
                        octal.append(data[pos])
                        pos += 1
                    out.append(int(octal, 8) & 0xFF)
                elif e in (0x0A, 0x0D):  # line continuation
                    pos += 1
                    if e == 0x0D and pos < len(data) and data[pos] == 0x0A:
                        pos += 1
                else:
                    out.append(e)
                    pos += 1
                continue
            if b == 0x28:
                depth += 1
            elif b == 0x29:
                depth -= 1
                if depth == 0:
                    self.pos = pos + 1
                    return bytes(out)
            out.append(b)
            pos += 1
        raise MalformedDocument("unterminated literal string")


def _decode_name(raw: bytes) -> str:
    def sub(m: re.Match) -> bytes:
        return bytes([int(m.group(1), 16)])

    return re.sub(rb"#([0-9A-Fa-f]{2})", sub, raw).decode("latin-1")


class _ValueParser:
    """Parses full PDF values (with dict/array nesting and N G R refs)."""

    def __init__(self, lexer: _Lexer):
        self.lexer = lexer
        self._pushback: list = []

    def _next(self):
        if self._pushback:
            return self._pushback.pop()
        return self.lexer.next_token()

    def parse(self):
        token = self._next()
        return self._value_from(token)

    def _value_from(self, token):
        if token is None:
            raise MalformedDocument("unexpected end of data")
        if isinstance(token, _Keyword):
            if token == "<<":
                return self._parse_dict()
            if token == "[":
                return self._parse_array()
            if token == "true":
                return True
            if token == "false":
                return False
            if token == "null":
                return None
            raise MalformedDocument(f"unexpected token {token!r}")
        if isinstance(token, int):
            return self._maybe_ref(token)
        return token

    def _maybe_ref(self, first: int):
        second = self._next()
        if isinstance(second, int) and not isinstance(second, bool):
            third = self._next()
            if isinstance(third, _Keyword) and third == "R":
                return _Ref(first, second)
            self._pushback.append(third)
            self._pushback.append(second)
            return first
        if second is not None:
            self._pushback.append(second)
        return first

    def _parse_dict(self) -> dict:
        result: dict = {}
        while True:
            token = self._next()
            if token is None:
                raise MalformedDocument("unterminated dictionary")
            if isinstance(token, _Keyword) and token == ">>":
                return result
            if not isinstance(token, _Name):
                raise MalformedDocument("dictionary key is not a name")
            result[str(token)] = self.parse()

    def _parse_array(self) -> list:
        result: list = []
        while True:
            token = self._next()
            if token is None:
                raise MalformedDocument("unterminated array")
            if isinstance(token, _Keyword) and token == "]":
                return result
            result.append(self._value_from(token))


@dataclass
class _PdfObject:
    value: object
    stream: bytes | None


_OBJ_RE = re.compile(rb"(\d+)\s+(\d+)\s+obj\b")
_STREAM_START_RE = re.compile(rb"stream(\r\n|\n|\r)")


def _scan_objects(data: bytes) -> dict[int, _PdfObject]:
    objects: dict[int, _PdfObject] = {}
    for m in _OBJ_RE.finditer(data):
        num = int(m.group(1))
        lexer = _Lexer(data, m.end())
        try:
            value = _ValueParser(lexer).parse()
        except MalformedDocument:
            continue
        stream = None
        tail = _Lexer(data, lexer.pos)
        tail.skip_whitespace()
        if data[tail.pos : tail.pos + 6] == b"stream":
            sm = _STREAM_START_RE.match(data, tail.pos)
            if sm:
                start = sm.end()
                length = value.get("Length") if isinstance(value, dict) else None
                end = -1
                if isinstance(length, int):
                    candidate = start + length
                    if data[candidate : candidate + 20].lstrip(b"\r\n ").startswith(b"endstream"):
                        end = candidate
                if end < 0:
                    end = data.find(b"endstream", start)
                if end >= 0:
                    stream = data[start:end].rstrip(b"\r\n")
        objects[num] = _PdfObject(value, stream)
    return objects


def _ascii85_decode(raw: bytes) -> bytes:
    body = re.sub(rb"\s", b"", raw)
    if body.startswith(b"<~"):
        body = body[2:]
    if body.endswith(b"~>"):
        body = body[:-2]
    return base64.a85decode(body)


def _decode_stream(obj: _PdfObject, resolve) -> bytes | None:
    if obj.stream is None:
        return None
    value = obj.value if isinstance(obj.value, dict) else {}
    filters = resolve(value.get("Filter"))
    if filters is None:
        filters = []
    elif not isinstance(filters, list):
        filters = [filters]
    data = obj.stream
    for f in filters:
        name = str(f)
        try:
            if name == "FlateDecode":
                data = zlib.decompress(data)
            elif name in ("ASCII85Decode", "A85"):
                data = _ascii85_decode(data)
            elif name in ("ASCIIHexDecode", "AHx"):
                hexdata = re.sub(rb"[\s>]", b"", data)
                if len(hexdata) % 2:
                    hexdata += b"0"
                data = bytes.fromhex(hexdata.decode("ascii"))
            else:
                logger.debug("skipping stream with unsupported filter %s", name)
                return None
        except Exception:
            logger.debug("failed to decode stream filter %s", name)
            return None
    return data


# --- page tree -----------------------------------------------------------

_INHERITED_KEYS = ("MediaBox", "Resources", "Rotate")


def _collect_pages(objects: dict[int, _PdfObject], resolve) -> list[dict]:
    root = None
    for obj in objects.values():
        if isinstance(obj.value, dict) and obj.value.get("Type") == "Catalog":
            root = resolve(obj.value.get("Pages"))
            break
    pages: list[dict] = []

    def walk(node: dict, inherited: dict, seen: frozenset) -> None:
        if not isinstance(node, dict):
            return
        merged = dict(inherited)
        for key in _INHERITED_KEYS:
            if key in node:
                merged[key] = node[key]
        node_type = node.get("Type")
        if node_type == "Page":
            page = dict(node)
            for key, val in merged.items():
                page.setdefault(key, val)
            pages.append(page)
            return
        kids = resolve(node.get("Kids")) or []
        for kid in kids:
            marker = (kid.num, kid.gen) if isinstance(kid, _Ref) else id(kid)
            if marker in seen:
                continue
            walk(resolve(kid), merged, seen | {marker})

    if isinstance(root, dict):
        walk(root, {}, frozenset())
    if not pages:  # fall back to file order when the catalog walk fails
        for obj in objects.values():
            if isinstance(obj.value, dict) and obj.value.get("Type") == "Page":
                pages.append(obj.value)
    return pages


# --- content interpretation ----------------------------------------------

_IDENTITY = (1.0, 0.0, 0.0, 1.0, 0.0, 0.0)


def _mat_mul(m1, m2):
    a1, b1, c1, d1, e1, f1 = m1
    a2, b2, c2, d2, e2, f2 = m2
    return (
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
        e1 * a2 + f1 * c2 + e2,
        e1 * b2 + f1 * d2 + f2,
    )


def _translation(tx, ty):
    return (1.0, 0.0, 0.0, 1.0, tx, ty)


@dataclass
class _Run:
    x: float
    y: float  # baseline, PDF coordinates (origin bottom-left)
    text: str
    size: float
    width: float
    font: str


class _FontInfo:
    def __init__(self, base_font: str, widths: list | None, first_char: int):
        self.base_font = base_font
        std = _FONT_METRICS.get(base_font) or _FONT_METRICS[_FALLBACK_FONT]
        self.std_widths = std["widths"]
        self.ascent = std["ascent"]
        self.descent = std["descent"]
        self.own_widths = widths
        self.first_char = first_char

    def advance(self, code: int) -> float:
        if self.own_widths is not None:
            idx = code - self.first_char
            if 0 <= idx < len(self.own_widths):
                w = self.own_widths[idx]
                if isinstance(w, (int, float)) and w > 0:
                    return float(w)
        if 0 <= code < len(self.std_widths):
            w = self.std_widths[code]
            if w:
                return float(w)
        return float(_DEFAULT_WIDTH)


_DEFAULT_FONT_INFO = _FontInfo(_FALLBACK_FONT, None, 0)


def _page_fonts(page: dict, resolve) -> dict[str, _FontInfo]:
    fonts: dict[str, _FontInfo] = {}
    res = resolve(page.get("Resources")) or {}
    font_dict = resolve(res.get("Font")) or {}
    if not isinstance(font_dict, dict):
        return fonts
    for key, ref in font_dict.items():
        fd = resolve(ref)
        if not isinstance(fd, dict):
            continue
        base = str(resolve(fd.get("BaseFont")) or _FALLBACK_FONT)
        base = base.split("+", 1)[-1]  # drop subset prefix ABCDEF+
        widths = resolve(fd.get("Widths"))
        first_char = resolve(fd.get("FirstChar")) or 0
        if not isinstance(widths, list):
            widths = None
        fonts[key] = _FontInfo(base, widths, int(first_char))
    return fonts


def _interpret(content: bytes, fonts: dict[str, _FontInfo]) -> list[_Run]:
    runs: list[_Run] = []
    lexer = _Lexer(content)
    operands: list = []
    ctm = _IDENTITY
    gs_stack: list = []
    tm = tlm = None
    font = _DEFAULT_FONT_INFO
    font_size = 0.0
    leading = 0.0
    char_spacing = 0.0
    word_spacing = 0.0
    hscale = 1.0

    def num(value, default=0.0) -> float:
        return float(value) if isinstance(value, (int, float)) else default

    def show(text_bytes: bytes) -> None:
        nonlocal tm
        if tm is None or not text_bytes:
            return
        text = text_bytes.decode("cp1252", errors="replace")
        device = _mat_mul(tm, ctm)
        advance = 0.0
        for ch in text:
            advance += font.advance(ord(ch) if ord(ch) < 256 else 0) / 1000.0 * font_size
            advance += char_spacing
            if ch == " ":
                advance += word_spacing
        advance *= hscale
        size_dev = abs(font_size * device[3]) or font_size
        width_dev = abs(advance * device[0]) or advance
        if text.strip():
            runs.append(_Run(device[4], device[5], text, size_dev, width_dev, font.base_font))
        tm = _mat_mul(_translation(advance, 0.0), tm)

    def text_line_advance(tx: float, ty: float) -> None:
        nonlocal tm, tlm
        if tlm is None:
            return
        tlm = _mat_mul(_translation(tx, ty), tlm)
        tm = tlm

    while True:
        token = lexer.next_token()
        if token is None:
            break
        if isinstance(token, _Keyword):
            op = str(token)
            if op == "<<":
                # inline dictionary operand (e.g. for BDC); parse and ignore
                try:
                    parser = _ValueParser(lexer)
                    parser._pushback.append(_Keyword("<<"))
                    operands.append(parser.parse())
                except MalformedDocument:
                    break
                continue
            if op == "[":
                try:
                    parser = _ValueParser(lexer)
                    parser._pushback.append(_Keyword("["))
                    operands.append(parser.parse())
                except MalformedDocument:
                    break
                continue
            if op == "q":
                gs_stack.append(ctm)
            elif op == "Q":
                ctm = gs_stack.pop() if gs_stack else _IDENTITY
            elif op == "cm" and len(operands) >= 6:
                ctm = _mat_mul(tuple(num(v) for v in operands[-6:]), ctm)
            elif op == "BT":
                tm = tlm = _IDENTITY
            elif op == "ET":
                tm = tlm = None
            elif op == "Tf" and len(operands) >= 2:
                name = operands[-2]
                font = fonts.get(str(name), _DEFAULT_FONT_INFO)
                font_size = num(operands[-1])
            elif op == "TL" and operands:
                leading = num(operands[-1])
            elif op == "Tc" and operands:
                char_spacing = num(operands[-1])
            elif op == "Tw" and operands:
                word_spacing = num(operands[-1])
            elif op == "Tz" and operands:
                hscale = num(operands[-1], 100.0) / 100.0
            elif op == "Td" and len(operands) >= 2:
                text_line_advance(num(operands[-2]), num(operands[-1]))
            elif op == "TD" and len(operands) >= 2:
                leading = -num(operands[-1])
                text_line_advance(num(operands[-2]), num(operands[-1]))
            elif op == "Tm" and len(operands) >= 6:
                tlm = tm = tuple(num(v) for v in operands[-6:])
            elif op == "T*":
                text_line_advance(0.0, -leading)
            elif op == "Tj" and operands and isinstance(operands[-1], bytes):
                show(operands[-1])
            elif op == "'" and operands and isinstance(operands[-1], bytes):
                text_line_advance(0.0, -leading)
                show(operands[-1])
            elif op == '"' and len(operands) >= 3 and isinstance(operands[-1], bytes):
                word_spacing = num(operands[-3])
                char_spacing = num(operands[-2])
                text_line_advance(0.0, -leading)
                show(operands[-1])
            elif op == "TJ" and operands and isinstance(operands[-1], list):
                for element in operands[-1]:
                    if isinstance(element, bytes):
                        show(element)
                    elif isinstance(element, (int, float)) and tm is not None:
                        shift = -float(element) / 1000.0 * font_size * hscale
                        tm = _mat_mul(_translation(shift, 0.0), tm)
            operands.clear()
        else:
            operands.append(token)
    return runs


# --- run grouping ---------------------------------------------------------


def _runs_to_blocks(runs: list[_Run], page_index: int, page_height: float) -> list[TextBlock]:
    blocks: list[TextBlock] = []
    ordered = sorted(runs, key=lambda r: (-r.y, r.x))
    lines: list[list[_Run]] = []
    for run in ordered:
        if lines and abs(lines[-1][0].y - run.y) <= _LINE_TOLERANCE:
            lines[-1].append(run)
        else:
            lines.append([run])

    for line in lines:
        line.sort(key=lambda r: r.x)
        groups: list[list[_Run]] = [[line[0]]]
        for run in line[1:]:
            prev = groups[-1][-1]
            gap = run.x - (prev.x + prev.width)
            if gap > max(6.0, 0.75 * max(prev.size, run.size)):
                groups.append([run])
            else:
                groups[-1].append(run)
        for group in groups:
            text_parts = [group[0].text]
            for prev, cur in zip(group, group[1:]):
                gap = cur.x - (prev.x + prev.width)
                joiner = " " if gap > 0.13 * max(prev.size, cur.size) else ""
                if joiner and not text_parts[-1].endswith(" ") and not cur.text.startswith(" "):
                    text_parts.append(joiner)
                text_parts.append(cur.text)
            text = "".join(text_parts).strip()
            if not text:
                continue
            size = max(r.size for r in group)
            metrics = _FONT_METRICS.get(group[0].font) or _FONT_METRICS[_FALLBACK_FONT]
            ascent = metrics["ascent"] / 1000.0 * size
            descent = metrics["descent"] / 1000.0 * size  # negative
            baseline = group[0].y
            x0 = group[0].x
            x1 = group[-1].x + group[-1].width
            y0 = page_height - (baseline + ascent)
            y1 = page_height - (baseline + descent)
            if x1 <= x0:
                x1 = x0 + 1.0
            if y1 <= y0:
                y1 = y0 + 1.0
            blocks.append(TextBlock(page=page_index, bbox=(x0, y0, x1, y1), text=text))
    return blocks


def extract_pdf_blocks(data: bytes) -> list[TextBlock]:
    """Extract positioned text blocks from a text-based PDF."""
    if not data.startswith(b"%PDF"):
        raise MalformedDocument("missing PDF header")
    if b"/Encrypt" in data[-2048:]:
        raise MalformedDocument("encrypted PDFs are not supported")
    objects = _scan_objects(data)
    if not objects:
        raise MalformedDocument("no PDF objects found")

    def resolve(value, _depth: int = 0):
        while isinstance(value, _Ref) and _depth < 32:
            obj = objects.get(value.num)
            value = obj.value if obj else None
            _depth += 1
        return value

    pages = _collect_pages(objects, resolve)
    if not pages:
        raise MalformedDocument("no pages found")

    blocks: list[TextBlock] = []
    for page_index, page in enumerate(pages):
        media_box = resolve(page.get("MediaBox")) or [0, 0, 612, 792]
        page_height = float(resolve(media_box[3])) - float(resolve(media_box[1]))
        contents = resolve(page.get("Contents"))
        parts = contents if isinstance(contents, list) else [page.get("Contents")]
        payload = bytearray()
        for part in parts:
            ref = part
            if isinstance(ref, _Ref):
                obj = objects.get(ref.num)
            else:
                obj = None
            if obj is None:
                continue
            decoded = _decode_stream(obj, resolve)
            if decoded:
                payload += decoded
                payload += b"\n"
        if not payload:
            continue
        fonts = _page_fonts(page, resolve)
        runs = _interpret(bytes(payload), fonts)
        blocks.extend(_runs_to_blocks(runs, page_index, page_height))
    return blocks
