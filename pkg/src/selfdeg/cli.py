"""
Command line front end of the self-mapping degree calculator
"""

import sys
from argparse import ArgumentParser, Namespace
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence, TextIO

from pydantic import ValidationError
from rich.console import Console

from selfdeg.config import Config
from selfdeg.core import degset
from selfdeg.core.degset import contains, describe, has_trivial_band
from selfdeg.core.dsl import parse, render
from selfdeg.core.loggers import Logger
from selfdeg.engine import (
    degrees,
    geometry_of,
    lens_reversal_report,
    minus_one_in,
    with_zero,
)
from selfdeg.types.cli_types import (
    CanonicalPayload,
    EnvelopeStatus,
    ErrorPayload,
    GeometryPayload,
    MembershipPayload,
    MembersPayload,
    OutputEnvelope,
    ReversalPayload,
    SetPayload,
)
from selfdeg.types.config_types import CalculatorConfig
from selfdeg.types.degree_types import DegreeSet
from selfdeg.types.exceptions import (
    InvalidInputError,
    InvariantViolationError,
    ParseError,
    SelfDegreeError,
)
from selfdeg.types.manifold_types import Geometry, ManifoldDesc
from selfdeg.utils import add_config_arguments, extract_version

ZERO_NOTE = (
    "0 (the degree of a constant map) is not in this set as stated; "
    "pass --with-zero to include it"
)
TRIVIAL_BAND_NOTE = "whether -1 is a degree of this manifold is undetermined"
QUERY_KEYS = ("desc", "lo", "hi", "d", "p", "q")


class _ArgumentParser(ArgumentParser):
    """Reports usage errors as invalid input instead of exiting"""

    def error(self, message: str) -> NoReturn:
        """Raises InvalidInputError with argparse's message"""
        raise InvalidInputError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    """The argument parser for every subcommand; global flags are accepted anywhere"""
    common = add_config_arguments(_ArgumentParser(add_help=False))
    parser = _ArgumentParser(
        prog="selfdeg",
        description="Exact self-mapping degree sets of closed 3-manifolds",
        parents=[common],
        epilog='Negative numbers are read as numbers: "contains <desc> -1", or after "--"',
    )
    parser.add_argument("--version", action="version", version=extract_version())
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name: str, help: str, with_desc: bool = True) -> ArgumentParser:
        sub = commands.add_parser(name, help=help, parents=[common])
        if with_desc:
            sub.add_argument("desc", help="manifold description, e.g. \"TB[2,1;1,1]\"")
        return sub

    command("describe", "canonical description of D(M)")
    listing = command("list", "members of D(M) in a range")
    listing.add_argument("--from", dest="lo", type=int, required=True)
    listing.add_argument("--to", dest="hi", type=int, required=True)
    membership = command("contains", "whether d is in D(M)")
    membership.add_argument("d", type=int)
    command("classify", "geometry of M")
    command("minus-one", "whether -1 is in D(M)")
    command("canonical", "canonical form of the description")
    reversal = command("lens-reversal", "orientation reversal of L(p, q)", with_desc=False)
    reversal.add_argument("p", type=int)
    reversal.add_argument("q", type=int)
    return parser


def _settings_from(args: Namespace) -> CalculatorConfig:
    """Settings file values overridden by the flags actually given"""
    path = getattr(args, "config", None)
    try:
        base = CalculatorConfig.from_yaml(path) if path else CalculatorConfig()
        overrides = {
            name: getattr(args, name)
            for name in CalculatorConfig.model_fields
            if hasattr(args, name)
        }
        return CalculatorConfig(**{**base.model_dump(), **overrides})
    except FileNotFoundError as e:
        raise InvalidInputError(f"Config file {path} not found") from e
    except ValidationError as e:
        raise InvalidInputError(f"Invalid settings: {e}") from e


def _apply_zero(s: DegreeSet) -> DegreeSet:
    return with_zero(s) if Config.with_zero else s


def _set_notes(s: DegreeSet) -> List[str]:
    if has_trivial_band(s):
        return [TRIVIAL_BAND_NOTE]
    if not Config.with_zero and contains(s, 0) is False:
        return [ZERO_NOTE]
    return []


def _geometry(desc: ManifoldDesc) -> str:
    return Geometry(geometry_of(desc)).value


def _describe(args: Namespace) -> OutputEnvelope:
    desc = parse(args.desc)
    s = _apply_zero(degrees(desc))
    return OutputEnvelope(
        command="describe",
        query={"desc": args.desc},
        geometry=_geometry(desc),
        result=SetPayload(description=describe(s)),
        notes=_set_notes(s),
    )


def _list(args: Namespace) -> OutputEnvelope:
    if args.lo > args.hi:
        raise InvalidInputError(f"Empty range: --from {args.lo} is above --to {args.hi}")
    width = args.hi - args.lo + 1
    if width > Config.max_enumeration_width:
        raise InvalidInputError(
            f"Range width {width} exceeds the limit of {Config.max_enumeration_width}; "
            "narrow --from/--to or raise --max-enumeration-width"
        )
    desc = parse(args.desc)
    s = _apply_zero(degrees(desc))
    return OutputEnvelope(
        command="list",
        query={"desc": args.desc, "lo": args.lo, "hi": args.hi},
        geometry=_geometry(desc),
        result=MembersPayload(
            lo=args.lo, hi=args.hi, members=degset.enumerate(s, args.lo, args.hi)
        ),
        notes=_set_notes(s),
    )


def _contains(args: Namespace) -> OutputEnvelope:
    desc = parse(args.desc)
    s = _apply_zero(degrees(desc))
    value = contains(s, args.d)
    notes = [TRIVIAL_BAND_NOTE] if value is None else []
    if args.d == 0 and value is False:
        notes.append(ZERO_NOTE)
    return OutputEnvelope(
        command="contains",
        query={"desc": args.desc, "d": args.d},
        geometry=_geometry(desc),
        result=MembershipPayload(value=value),
        notes=notes,
    )


def _classify(args: Namespace) -> OutputEnvelope:
    desc = parse(args.desc)
    geometry = _geometry(desc)
    return OutputEnvelope(
        command="classify",
        query={"desc": args.desc},
        geometry=geometry,
        result=GeometryPayload(geometry=geometry),
    )


def _minus_one(args: Namespace) -> OutputEnvelope:
    desc = parse(args.desc)
    value = minus_one_in(desc)
    return OutputEnvelope(
        command="minus-one",
        query={"desc": args.desc},
        geometry=_geometry(desc),
        result=MembershipPayload(value=value),
        notes=[TRIVIAL_BAND_NOTE] if value is None else [],
    )


def _canonical(args: Namespace) -> OutputEnvelope:
    desc = parse(args.desc)
    return OutputEnvelope(
        command="canonical",
        query={"desc": args.desc},
        geometry=_geometry(desc),
        result=CanonicalPayload(text=render(desc)),
    )


def _lens_reversal(args: Namespace) -> OutputEnvelope:
    return OutputEnvelope(
        command="lens-reversal",
        query={"p": args.p, "q": args.q},
        geometry=Geometry.S3.value,
        result=ReversalPayload(report=lens_reversal_report(args.p, args.q)),
    )


COMMANDS: Dict[str, Callable[[Namespace], OutputEnvelope]] = {
    "describe": _describe,
    "list": _list,
    "contains": _contains,
    "classify": _classify,
    "minus-one": _minus_one,
    "canonical": _canonical,
    "lens-reversal": _lens_reversal,
}


def _truth(value: Optional[bool]) -> str:
    return "unknown" if value is None else str(value).lower()


def format_text(envelope: OutputEnvelope) -> List[str]:
    """Plain-text lines for the result of a successful command"""
    result = envelope.result
    if isinstance(result, SetPayload):
        return [result.description, f"geometry: {envelope.geometry}"]
    if isinstance(result, MembersPayload):
        return [" ".join(str(member) for member in result.members)]
    if isinstance(result, MembershipPayload):
        return [_truth(result.value)]
    if isinstance(result, GeometryPayload):
        return [result.geometry]
    if isinstance(result, CanonicalPayload):
        return [result.text]
    if isinstance(result, ReversalPayload):
        return [
            f"{name}: {_truth(value)}" for name, value in result.report.model_dump().items()
        ]
    return []


def _error_envelope(command: str, query: Dict[str, Any], error: SelfDegreeError) -> OutputEnvelope:
    diagnostics = error.diagnostics if isinstance(error, ParseError) else []
    return OutputEnvelope(
        status=EnvelopeStatus.ERROR,
        command=command,
        query=query,
        result=ErrorPayload(
            exit_code=error.exit_code, message=error.message, diagnostics=diagnostics
        ),
    )


def _execute(args: Namespace, query: Dict[str, Any]) -> OutputEnvelope:
    """Runs the command, reporting unexpected failures as invariant violations"""
    try:
        return COMMANDS[args.command](args)
    except SelfDegreeError:
        raise
    except Exception as e:
        Logger.get_cli_logger().exception(f"{args.command} failed on {query}")
        raise InvariantViolationError(
            f"Internal error: {type(e).__name__}: {e}"
        ) from e


def run(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Runs one command and returns its exit code

    Parameters
    ----------
    argv : Optional[Sequence[str]]
        Arguments without the program name; sys.argv[1:] if None
    out, err : Optional[TextIO]
        Result and diagnostic streams; stdout and stderr if None

    Returns
    -------
    int
        0 ok, 1 invalid input, 2 unsupported class, 3 internal invariant violation
    """
    console = Console(
        file=out or sys.stdout, soft_wrap=True, markup=False, highlight=False, emoji=False
    )
    errors = Console(
        file=err or sys.stderr, soft_wrap=True, markup=False, highlight=False, emoji=False
    )
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        Config.load(_settings_from(args))
    except SystemExit as e:
        return int(e.code or 0)
    except SelfDegreeError as e:
        errors.print(f"error: {e.message}")
        return e.exit_code

    logger = Logger.get_cli_logger()
    query = {key: value for key, value in vars(args).items() if key in QUERY_KEYS}
    try:
        envelope = _execute(args, query)
    except SelfDegreeError as e:
        logger.info(f"{args.command} rejected {query}: {e.message}")
        if Config.json_output:
            console.print(_error_envelope(args.command, query, e).model_dump_json(indent=2))
        errors.print(f"error: {e.message}")
        if isinstance(e, ParseError) and "desc" in query:
            for diagnostic in e.diagnostics:
                errors.print(diagnostic.render(query["desc"]))
        return e.exit_code

    if Config.json_output:
        console.print(envelope.model_dump_json(indent=2))
    else:
        for line in format_text(envelope):
            console.print(line)
        if not Config.quiet:
            for note in envelope.notes:
                errors.print(f"note: {note}")
    return 0


def main() -> None:
    """Console script entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
