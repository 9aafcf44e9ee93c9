"""Параметри запуску з командного рядка та файлу конфігурації."""
import argparse
import configparser
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from src.domain.entities import validate_mesh_size
from src.domain.exceptions import BadMeshSizeError, UsageError
from src.domain.value_objects import SolverOptions

MODES = ('solve', 'study', 'validate')
FORMATS = ('csv', 'json')

DEFAULT_STUDY_EPSILONS = tuple(math.ldexp(1.0, -k) for k in range(8, 21, 2))
DEFAULT_STUDY_NS = (64, 128, 256, 512, 1024)
DEFAULT_SINGLE_EPSILON = math.ldexp(1.0, -8)
DEFAULT_SINGLE_N = 64

_POWER_OF_TWO = re.compile(r'^\s*2\s*\^\s*(-?\d+)\s*$')
_FLAG_IN_MESSAGE = re.compile(r'argument ([^\s:]+)')


@dataclass(frozen=True)
class RunConfig:
    """Повний набір параметрів одного запуску."""

    mode: str = 'study'
    example_id: int = 1
    epsilons: tuple[float, ...] = DEFAULT_STUDY_EPSILONS
    Ns: tuple[int, ...] = DEFAULT_STUDY_NS
    M: int | None = None
    output_dir: Path = Path('results')
    formats: frozenset[str] = frozenset(FORMATS)
    emit_grid: bool = False
    sharper_tau: bool = False
    literal_rhs: bool = False
    jobs: int = 1
    log_file: Path | None = None
    verbose: bool = False

    @property
    def options(self) -> SolverOptions:
        return SolverOptions(sharper_tau=self.sharper_tau, literal_rhs=self.literal_rhs)


def parse_epsilon(text: str) -> float:
    """
    Розбирає ε у вигляді '2^-k' (точна степінь двійки) або десяткового числа.

    Raises:
        argparse.ArgumentTypeError: Якщо значення не число або поза (0, 1]
    """
    match = _POWER_OF_TWO.match(text)
    try:
        value = math.ldexp(1.0, int(match.group(1))) if match else float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Невірне значення ε: {text!r}")
    if not (0.0 < value <= 1.0):
        raise argparse.ArgumentTypeError(f"ε має лежати в (0, 1]: {text!r}")
    return value


def parse_mesh_size(text: str) -> int:
    """
    Raises:
        argparse.ArgumentTypeError: Якщо N не ціле, менше 8 або не кратне 4
    """
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"N має бути цілим числом: {text!r}")
    try:
        validate_mesh_size(value)
    except BadMeshSizeError as e:
        raise argparse.ArgumentTypeError(str(e))
    return value


def parse_positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Очікується ціле число: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"Значення має бути >= 1: {value}")
    return value


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser, що кидає UsageError замість виходу з процесу."""

    def error(self, message: str):
        match = _FLAG_IN_MESSAGE.search(message)
        raise UsageError(message, match.group(1) if match else None)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog='main.py',
        description='Гібридна схема на сітці Шишкіна для параболічних задач '
                    'з розривною конвекцією та таблиці збіжності.',
    )
    # default=None всюди: відсутній прапорець не перекриває файл конфігурації.
    parser.add_argument('--mode', choices=MODES, default=None)
    parser.add_argument('--example', type=int, choices=(1, 2), default=None)
    parser.add_argument('--epsilon', type=parse_epsilon, action='append', default=None,
                        help="ε, напр. 2^-8; можна повторювати")
    parser.add_argument('--N', type=parse_mesh_size, action='append', default=None,
                        help='кількість інтервалів, кратна 4; можна повторювати')
    parser.add_argument('--M', type=parse_positive_int, default=None,
                        help='кількість часових кроків для --mode solve та validate (типово M = N)')
    parser.add_argument('--out', type=Path, default=None)
    parser.add_argument('--format', choices=FORMATS, action='append', default=None)
    parser.add_argument('--emit-grid', action='store_true', default=None)
    parser.add_argument('--jobs', type=parse_positive_int, default=None)
    parser.add_argument('--sharper-tau', action='store_true', default=None)
    parser.add_argument('--literal-rhs', action='store_true', default=None)
    parser.add_argument('--config', type=Path, default=None)
    parser.add_argument('--log-file', type=Path, default=None)
    parser.add_argument('--verbose', action='store_true', default=None)
    return parser


def _split_list(text: str) -> list[str]:
    return [item for item in re.split(r'[,\s]+', text.strip()) if item]


# Ключ файлу -> (атрибут Namespace, перетворення значення); None для булевих ключів.
_CONFIG_KEYS = {
    'mode': ('mode', str),
    'example': ('example', int),
    'epsilon': ('epsilon', lambda text: [parse_epsilon(v) for v in _split_list(text)]),
    'n': ('N', lambda text: [parse_mesh_size(v) for v in _split_list(text)]),
    'm': ('M', parse_positive_int),
    'out': ('out', Path),
    'format': ('format', _split_list),
    'emit_grid': ('emit_grid', None),
    'jobs': ('jobs', parse_positive_int),
    'sharper_tau': ('sharper_tau', None),
    'literal_rhs': ('literal_rhs', None),
    'log_file': ('log_file', Path),
    'verbose': ('verbose', None),
}


def _read_config_text(config_text: str) -> dict:
    """
    Розбирає плоский файл "ключ = значення" без секцій.

    Raises:
        UsageError: Невідомий ключ або невалідне значення
    """
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = lambda key: key.strip().lower().replace('-', '_')
    try:
        parser.read_string('[run]\n' + config_text)
    except configparser.Error as e:
        raise UsageError(f"Невалідний файл конфігурації: {e}", '--config')

    values = {}
    section = parser['run']
    for key in section:
        if key not in _CONFIG_KEYS:
            raise UsageError(f"Невідомий ключ у файлі конфігурації: {key}", key)
        attribute, convert = _CONFIG_KEYS[key]
        try:
            values[attribute] = section.getboolean(key) if convert is None else convert(section[key])
        except (ValueError, argparse.ArgumentTypeError) as e:
            raise UsageError(f"Невалідне значення {key} у файлі конфігурації: {e}", key)

    if 'mode' in values and values['mode'] not in MODES:
        raise UsageError(f"Невідомий режим: {values['mode']}", 'mode')
    if 'example' in values and values['example'] not in (1, 2):
        raise UsageError(f"Невідомий приклад: {values['example']}", 'example')
    unknown_formats = set(values.get('format', ())) - set(FORMATS)
    if unknown_formats:
        raise UsageError(f"Невідомі формати: {sorted(unknown_formats)}", 'format')
    return values


def parse_config(argv: Sequence[str], config_text: str | None = None) -> RunConfig:
    """
    Будує RunConfig: типові значення, потім файл конфігурації, потім прапорці.

    Args:
        argv: Аргументи командного рядка (без імені програми)
        config_text: Вміст файлу конфігурації; якщо None, читається файл з --config

    Returns:
        Параметри запуску

    Raises:
        UsageError: Невірний прапорець або значення (з назвою прапорця)
    """
    args = build_parser().parse_args(list(argv))

    if config_text is None and args.config is not None:
        try:
            config_text = args.config.read_text(encoding='utf-8')
        except OSError as e:
            raise UsageError(f"Не вдалося прочитати {args.config}: {e}", '--config')
    file_values = _read_config_text(config_text) if config_text else {}

    def pick(attribute: str, default):
        flag_value = getattr(args, attribute)
        if flag_value is not None:
            return flag_value
        return file_values.get(attribute, default)

    mode = pick('mode', 'study')
    if mode == 'study':
        if pick('M', None) is not None:
            raise UsageError("Режим study завжди бере M = N, --M не застосовний", '--M')
        epsilons = tuple(pick('epsilon', DEFAULT_STUDY_EPSILONS))
        Ns = tuple(pick('N', DEFAULT_STUDY_NS))
    else:
        epsilons = tuple(pick('epsilon', (DEFAULT_SINGLE_EPSILON,)))
        Ns = tuple(pick('N', (DEFAULT_SINGLE_N,)))
        if len(epsilons) != 1:
            raise UsageError(f"Режим {mode} приймає одне значення ε", '--epsilon')
        if len(Ns) != 1:
            raise UsageError(f"Режим {mode} приймає одне значення N", '--N')

    if any(later <= earlier for earlier, later in zip(Ns, Ns[1:])):
        raise UsageError(f"Значення N мають строго зростати: {list(Ns)}", '--N')

    return RunConfig(
        mode=mode,
        example_id=pick('example', 1),
        epsilons=epsilons,
        Ns=Ns,
        M=pick('M', None),
        output_dir=pick('out', Path('results')),
        formats=frozenset(pick('format', FORMATS)),
        emit_grid=bool(pick('emit_grid', False)),
        sharper_tau=bool(pick('sharper_tau', False)),
        literal_rhs=bool(pick('literal_rhs', False)),
        jobs=pick('jobs', 1),
        log_file=pick('log_file', None),
        verbose=bool(pick('verbose', False)),
    )
