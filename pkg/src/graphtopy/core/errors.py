"""graphtopy 예외 계층 및 진단 객체"""


class GraphtopyError(Exception):
    """graphtopy 기본 예외"""

    def __init__(
        self,
        message: str,
        code: str | None = None,
        subject: str | None = None,
    ):
        super().__init__(message)
        self.message = message
        self.code = code  # GT-001, GT-002 등 구조화된 에러 코드
        self.subject = subject

    def __str__(self) -> str:
        parts = []
        if self.code:
            parts.append(f"[{self.code}]")
        parts.append(self.message)
        if self.subject is not None:
            parts.append(f"({self.subject})")
        return " ".join(parts)


class InvalidGraphError(GraphtopyError):
    """그래프 구조 불변식 위반"""

    def __init__(self, message: str, subject: str | None = None):
        super().__init__(message, code="GT-001", subject=subject)


class UnknownGraphKindError(GraphtopyError):
    """standard_graph 에 알 수 없는 종류"""

    def __init__(self, kind: str):
        super().__init__(f"Unknown graph kind: {kind}", code="GT-002", subject=kind)


class InvalidParameterError(GraphtopyError):
    """잘못된 매개변수 (p < 1, n < 1 등)"""

    def __init__(self, message: str, subject: str | None = None):
        super().__init__(message, code="GT-003", subject=subject)


class FlavorMismatchError(GraphtopyError):
    """directed / undirected 혼용"""

    def __init__(self, message: str = "Graphs must have the same flavor"):
        super().__init__(message, code="GT-004")


class LoopsPresentError(GraphtopyError):
    """루프가 있는 그래프에 적용할 수 없는 연산"""

    def __init__(self, message: str, subject: str | None = None):
        super().__init__(message, code="GT-005", subject=subject)


class NotACoveringError(GraphtopyError):
    """covering 이 아닌 사상"""

    def __init__(self, message: str, subject: str | None = None):
        super().__init__(message, code="GT-006", subject=subject)


class GeneratorMismatchError(GraphtopyError):
    """G-set 생성자 목록 불일치"""

    def __init__(self, left: list[str], right: list[str]):
        super().__init__(
            f"Generator lists differ: {left} vs {right}",
            code="GT-007",
        )
        self.left = left
        self.right = right


class InvalidActionError(GraphtopyError):
    """전단사가 아니거나 involution 이 아닌 생성자 작용"""

    def __init__(self, message: str, subject: str | None = None):
        super().__init__(message, code="GT-008", subject=subject)


class ConsistencyError(GraphtopyError):
    """내부 정합성 실패 (정수성, 비음수성)"""

    def __init__(self, message: str, subject: str | None = None):
        super().__init__(message, code="GT-009", subject=subject)


class InputFormatError(GraphtopyError):
    """입력 파일 형식 오류 (위치 정보 포함)"""

    def __init__(
        self,
        message: str,
        source: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ):
        super().__init__(message, code="GT-010", subject=source)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        base = super().__str__()
        if self.line is not None:
            location = f" at line {self.line}"
            if self.column is not None:
                location += f", column {self.column}"
            return base + location
        return base


class DisconnectedGraphError(GraphtopyError):
    """연결 그래프가 필요한 연산"""

    def __init__(self, message: str, subject: str | None = None):
        super().__init__(message, code="GT-011", subject=subject)


class Diagnostic:
    """검증 진단 항목"""

    def __init__(self, code: str, message: str, subject: str | None = None):
        self.code = code
        self.message = message
        self.subject = subject

    def __repr__(self) -> str:
        location = f" ({self.subject})" if self.subject else ""
        return f"[{self.code}]{location} {self.message}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagnostic):
            return False
        return (self.code, self.message, self.subject) == (
            other.code,
            other.message,
            other.subject,
        )

    def __hash__(self) -> int:
        return hash((self.code, self.message, self.subject))

    def to_dict(self) -> dict:
        """딕셔너리로 변환"""
        return {
            "code": self.code,
            "message": self.message,
            "subject": self.subject,
        }
