class DomainException(Exception):
    """Базовий виняток для domain layer."""
    pass


class MissingSideError(DomainException):
    """Обчислення кусково-заданого поля в точці розриву без вибору сторони."""
    pass


class OutOfDomainError(DomainException):
    """Точка (x, t) лежить поза областю [0, 1] x [0, T]."""
    pass


class UnknownExampleError(DomainException):
    """Запит на невідомий вбудований приклад."""
    pass


class BadMeshSizeError(DomainException):
    """Кількість інтервалів N не підходить для сітки Шишкіна."""
    pass


class IndexOutOfRangeError(DomainException):
    """Індекс вузла виходить за межі сітки."""
    pass


class NumericalError(DomainException):
    """Базовий виняток для збоїв чисельного розв'язувача."""
    pass


class SingularEliminationPivotError(NumericalError):
    """Вироджений знаменник при виключенні Y_{N/2±2} у рядку розриву."""

    def __init__(self, message: str, value: float):
        """
        Args:
            message: Опис помилки
            value: Значення знаменника 2ε ∓ h·a
        """
        self.value = value
        super().__init__(message)


class ZeroPivotError(NumericalError):
    """Нульовий ведучий елемент у прогонці (алгоритм Томаса)."""

    def __init__(self, message: str, row: int):
        """
        Args:
            message: Опис помилки
            row: Рядок, на якому зупинилось пряме виключення
        """
        self.row = row
        super().__init__(message)


class StepFailedError(NumericalError):
    """Збій на конкретному часовому кроці j."""

    def __init__(self, step: int, cause: DomainException):
        """
        Args:
            step: Індекс часового кроку j (перехід t_j -> t_{j+1})
            cause: Початковий виняток збирача або розв'язувача
        """
        self.step = step
        self.cause = cause
        super().__init__(f"Крок j={step}: {cause}")


class DegenerateErrorEstimate(NumericalError):
    """Порядок збіжності не визначений: одна з похибок не додатна."""
    pass


class UsageError(DomainException):
    """Неправильні параметри командного рядка або файлу конфігурації."""

    def __init__(self, message: str, flag: str | None = None):
        """
        Args:
            message: Опис помилки
            flag: Назва прапорця, що спричинив помилку
        """
        self.flag = flag
        super().__init__(message)
