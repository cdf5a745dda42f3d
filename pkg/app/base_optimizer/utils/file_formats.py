"""三種文字檔格式的解析與輸出。

- BaseFile：標頭 `elements: a b c`，之後每行一條蘊涵 `a b -> c`。
- PosetFile：標頭 `elements: ...`，之後每行一個序關係 `x < y`。
- PointsFile：標頭 `dim: d`，之後每行一個點 `name: q1 q2 ... qd`，座標為整數或 `p/q`。

`#` 之後視為註解，空白行忽略。每一行先轉成對應的 pydantic 列模型驗證，
驗證失敗時以 `FileFormatError` 回報行號。
"""
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, ValidationInfo, field_validator

from ..exceptions import DimensionMismatch, FileFormatError
from ..models import ElementSet, GroundSet, ImplicationalBase, PointConfiguration, Poset

ELEMENTS_HEADER = "elements:"
DIM_HEADER = "dim:"
ARROW = "->"


# --- 每行對應的 Pydantic 模型 ---
def _check_declared(names: Tuple[str, ...], info: ValidationInfo) -> Tuple[str, ...]:
    universe: Optional[GroundSet] = (info.context or {}).get("universe")
    if universe is not None:
        unknown = [name for name in names if name not in universe]
        if unknown:
            raise ValueError(f"未宣告的元素: {' '.join(unknown)}")
    return names


class ImplicationRow(BaseModel):
    """BaseFile 中一行蘊涵 `p1 p2 -> c1 c2`。"""
    premise: Tuple[str, ...] = ()
    conclusion: Tuple[str, ...] = ()

    @field_validator("premise", "conclusion")
    @classmethod
    def check_declared(cls, value: Tuple[str, ...], info: ValidationInfo) -> Tuple[str, ...]:
        return _check_declared(value, info)


class RelationRow(BaseModel):
    """PosetFile 中一行序關係 `x < y`。"""
    lower: str
    upper: str

    @field_validator("lower", "upper")
    @classmethod
    def check_declared(cls, value: str, info: ValidationInfo) -> str:
        _check_declared((value,), info)
        return value

    @field_validator("upper")
    @classmethod
    def check_distinct(cls, value: str, info: ValidationInfo) -> str:
        if info.data.get("lower") == value:
            raise ValueError("x < x 不是嚴格序關係")
        return value


class PointRow(BaseModel):
    """PointsFile 中一行點座標 `name: q1 q2 ...`。"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    coordinates: Tuple[Fraction, ...]

    @field_validator("name")
    @classmethod
    def check_name(cls, value: str) -> str:
        if not value or any(ch.isspace() for ch in value):
            raise ValueError(f"點名稱不可為空或含空白: {value!r}")
        return value

    @field_validator("coordinates", mode="before")
    @classmethod
    def parse_rationals(cls, value):
        """將 `3`、`-1/2` 之類的字串轉為精確的 `Fraction`。"""
        try:
            return tuple(v if isinstance(v, Fraction) else Fraction(v) for v in value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"無法解析的有理數: {e}") from None


# --- 解析 ---
def _meaningful_lines(text: str) -> Iterator[Tuple[int, str]]:
    """逐行去除註解與前後空白，略過空行；行號從 1 起算。"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _validation_message(e: ValidationError) -> str:
    messages = []
    for error in e.errors():
        location = ".".join(str(part) for part in error["loc"])
        messages.append(f"欄位 '{location}' - {error['msg']}" if location else error["msg"])
    return "; ".join(messages)


def _parse_elements_header(lines: Iterator[Tuple[int, str]]) -> GroundSet:
    try:
        number, line = next(lines)
    except StopIteration:
        raise FileFormatError(f"缺少標頭 `{ELEMENTS_HEADER} ...`") from None
    if not line.startswith(ELEMENTS_HEADER):
        raise FileFormatError(f"第一行必須是 `{ELEMENTS_HEADER} ...`", number)
    try:
        return GroundSet(elements=tuple(line[len(ELEMENTS_HEADER):].split()))
    except ValidationError as e:
        raise FileFormatError(_validation_message(e), number) from None


def parse_base(text: str) -> ImplicationalBase:
    """解析 BaseFile 文字，回傳正規化後的基底。

    Args:
        text (str): 檔案內容。

    Returns:
        ImplicationalBase: 結論已扣除前提、空結論與重複蘊涵已移除的基底。

    Raises:
        FileFormatError: 格式錯誤，訊息附帶行號。
        UniverseTooLarge: 若元素超過 64 個。
    """
    lines = _meaningful_lines(text)
    universe = _parse_elements_header(lines)
    pairs = []
    for number, line in lines:
        if line.count(ARROW) != 1:
            raise FileFormatError(f"蘊涵必須恰好包含一個 `{ARROW}`: {line}", number)
        left, right = line.split(ARROW)
        try:
            row = ImplicationRow.model_validate(
                {"premise": tuple(left.split()), "conclusion": tuple(right.split())},
                context={"universe": universe},
            )
        except ValidationError as e:
            raise FileFormatError(_validation_message(e), number) from None
        pairs.append((universe.mask_of(row.premise), universe.mask_of(row.conclusion)))
    return ImplicationalBase.from_masks(universe, pairs).normalize()


def parse_poset(text: str) -> Poset:
    """解析 PosetFile 文字，取遞移閉包後回傳偏序集。

    Raises:
        FileFormatError: 格式錯誤，或關係含有環。
    """
    lines = _meaningful_lines(text)
    universe = _parse_elements_header(lines)
    relations = []
    for number, line in lines:
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<":
            raise FileFormatError(f"序關係必須寫成 `x < y`: {line}", number)
        try:
            row = RelationRow.model_validate(
                {"lower": parts[0], "upper": parts[2]}, context={"universe": universe}
            )
        except ValidationError as e:
            raise FileFormatError(_validation_message(e), number) from None
        relations.append((row.lower, row.upper))
    try:
        return Poset.from_relations(universe, relations)
    except ValidationError as e:
        raise FileFormatError(f"序關係不構成偏序: {_validation_message(e)}") from None


def parse_points(text: str) -> PointConfiguration:
    """解析 PointsFile 文字。

    Raises:
        FileFormatError: 格式錯誤，訊息附帶行號。
        DimensionMismatch: 若某點的座標數與 `dim` 不符。
    """
    lines = _meaningful_lines(text)
    try:
        number, line = next(lines)
    except StopIteration:
        raise FileFormatError(f"缺少標頭 `{DIM_HEADER} d`") from None
    if not line.startswith(DIM_HEADER):
        raise FileFormatError(f"第一行必須是 `{DIM_HEADER} d`", number)
    try:
        dim = int(line[len(DIM_HEADER):].strip())
    except ValueError:
        raise FileFormatError("維度必須是整數", number) from None
    if dim < 1:
        raise FileFormatError("維度必須至少為 1", number)

    rows: List[PointRow] = []
    for number, line in lines:
        name, sep, rest = line.partition(":")
        if not sep:
            raise FileFormatError(f"點必須寫成 `name: q1 ... q{dim}`: {line}", number)
        try:
            row = PointRow.model_validate({"name": name.strip(), "coordinates": rest.split()})
        except ValidationError as e:
            raise FileFormatError(_validation_message(e), number) from None
        if len(row.coordinates) != dim:
            raise DimensionMismatch(
                f"第 {number} 行: 點 {row.name} 有 {len(row.coordinates)} 個座標，預期 {dim} 個"
            )
        rows.append(row)
    try:
        return PointConfiguration(
            universe=GroundSet(elements=tuple(row.name for row in rows)),
            dim=dim,
            coordinates=tuple(row.coordinates for row in rows),
        )
    except ValidationError as e:
        raise FileFormatError(_validation_message(e)) from None


def parse_element_set(universe: GroundSet, text: str) -> ElementSet:
    """解析命令列的 `a,b,c` 集合參數；空字串代表空集合。

    Raises:
        FileFormatError: 若含有未宣告的元素。
    """
    names = [name.strip() for name in text.split(",") if name.strip()]
    unknown = [name for name in names if name not in universe]
    if unknown:
        raise FileFormatError(f"未宣告的元素: {' '.join(unknown)}")
    return universe.subset(names)


# --- 輸出 ---
def format_base(base: ImplicationalBase) -> str:
    """輸出 BaseFile 文字，蘊涵順序不變。"""
    lines = [f"{ELEMENTS_HEADER} {' '.join(base.universe.elements)}".rstrip()]
    lines.extend(str(imp) for imp in base.implications)
    return "\n".join(lines) + "\n"


def format_poset(poset: Poset) -> str:
    """輸出 PosetFile 文字，只列出覆蓋關係。"""
    names = poset.universe.elements
    lines = [f"{ELEMENTS_HEADER} {' '.join(names)}".rstrip()]
    lines.extend(f"{names[x]} < {names[y]}" for x, y in poset.cover_pairs())
    return "\n".join(lines) + "\n"


def format_points(points: PointConfiguration) -> str:
    """輸出 PointsFile 文字。"""
    lines = [f"{DIM_HEADER} {points.dim}"]
    for name, vector in zip(points.universe.elements, points.coordinates):
        lines.append(f"{name}: {' '.join(str(v) for v in vector)}")
    return "\n".join(lines) + "\n"
