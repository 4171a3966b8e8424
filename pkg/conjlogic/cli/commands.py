"""
Subcommands: argument parsing, dispatch and exit codes
"""
import argparse
import logging
import os
import sys
from dataclasses import dataclass

import numpy as np

from conjlogic.analysis.consistency import cz_consistency_check
from conjlogic.analysis.contextuality import pm_square
from conjlogic.analysis.law_report import formula_table, law_report
from conjlogic.cli import layout
from conjlogic.cli.bench import run_bench
from conjlogic.clifford.gates import CzChoice, TheoryVariant
from conjlogic.clifford.transcript import apply_transcript_many, parse_transcript
from conjlogic.config import (
    BENCH_DEFAULT_GENERATORS,
    BENCH_DEFAULT_N,
    BENCH_DEFAULT_REPETITIONS,
    DEFAULT_CZ,
    DEFAULT_FORMAT,
    DEFAULT_THEORY,
    FORMAT_ENV_VAR,
    LOG_LEVEL,
    OUTPUT_FORMATS,
)
from conjlogic.errors import ConjLogicError, UsageError
from conjlogic.kernel.formula import parse_formula
from conjlogic.kernel.laws import logically_equivalent, logically_implies
from conjlogic.knowledge.measurement import measure_sequence
from conjlogic.knowledge.state import KnowledgeState, sorted_closure
from conjlogic.pauli.parser import parse_conjunction, parse_prop
from conjlogic.reduction.reducer import reduce_pair, reduce_set, reduce_single

logger = logging.getLogger(__name__)

SHARED_FLAGS = ('theory', 'cz', 'format', 'seed')

# shared flags each subcommand accepts; anything else is a conflict
ALLOWED_FLAGS = {
    'eval': {'format'},
    'laws': {'format'},
    'reduce': {'theory', 'cz', 'format'},
    'predict': {'theory', 'cz', 'format'},
    'closure': {'theory', 'cz', 'format'},
    'apply': {'theory', 'cz', 'format'},
    'measure': {'theory', 'cz', 'format', 'seed'},
    'pm': {'theory', 'format'},
    'consistency': {'cz', 'format'},
    'bench': {'theory', 'cz', 'format', 'seed'},
}


# =============================================================================
# COMMANDS
# =============================================================================

@dataclass(frozen=True)
class Eval:
    formula: str
    equiv: str = None
    implies: str = None
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Laws:
    tables: bool = False
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Reduce:
    props: tuple
    variant: TheoryVariant = TheoryVariant.QUANTUM
    cz: CzChoice = CzChoice.STANDARD
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Predict:
    generators: tuple
    query: object
    variant: TheoryVariant = TheoryVariant.QUANTUM
    cz: CzChoice = CzChoice.STANDARD
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Closure:
    generators: tuple
    variant: TheoryVariant = TheoryVariant.QUANTUM
    cz: CzChoice = CzChoice.STANDARD
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Apply:
    props: tuple
    transcript: object
    variant: TheoryVariant = TheoryVariant.QUANTUM
    cz: CzChoice = CzChoice.STANDARD
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Measure:
    generators: tuple
    questions: tuple
    seed: int = None
    variant: TheoryVariant = TheoryVariant.QUANTUM
    cz: CzChoice = CzChoice.STANDARD
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Pm:
    variant: TheoryVariant = TheoryVariant.QUANTUM
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Consistency:
    cz: CzChoice = CzChoice.STANDARD
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class Bench:
    n: int = BENCH_DEFAULT_N
    generators: int = BENCH_DEFAULT_GENERATORS
    repetitions: int = BENCH_DEFAULT_REPETITIONS
    seed: int = 0
    variant: TheoryVariant = TheoryVariant.QUANTUM
    cz: CzChoice = CzChoice.STANDARD
    format: str = DEFAULT_FORMAT
    dense: bool = False


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str = ""
    stderr: str = ""


# =============================================================================
# PARSING
# =============================================================================

class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of printing and exiting with 2"""

    def error(self, message):
        raise UsageError(message)


class _SetOnce(argparse.Action):
    """Store a flag value; giving the same flag twice with different values is a conflict"""

    def __call__(self, parser, namespace, values, option_string=None):
        previous = getattr(namespace, self.dest, None)
        if previous is not None and previous != values:
            raise UsageError(f"conflicting values for {option_string}: {previous} and {values}")
        setattr(namespace, self.dest, values)


def _seed(text):
    """argparse type for --seed: a non-negative integer"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"seed must be non-negative, got {value}")
    return value


def _shared_parser():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--theory', action=_SetOnce, choices=[v.value for v in TheoryVariant],
                        help=f"theory variant (default {DEFAULT_THEORY})")
    parent.add_argument('--cz', action=_SetOnce, choices=[c.value for c in CzChoice],
                        help=f"correlating transformation (default {DEFAULT_CZ})")
    parent.add_argument('--format', action=_SetOnce, choices=list(OUTPUT_FORMATS),
                        help=f"output format (default ${FORMAT_ENV_VAR} or {DEFAULT_FORMAT})")
    parent.add_argument('--seed', action=_SetOnce, type=_seed, help="seed for random outcomes")
    return parent


def default_format():
    value = os.environ.get(FORMAT_ENV_VAR, DEFAULT_FORMAT)
    if value not in OUTPUT_FORMATS:
        raise UsageError(f"{FORMAT_ENV_VAR}={value!r} is not one of {', '.join(OUTPUT_FORMATS)}")
    return value


def _options(ns):
    """Theory, CZ choice and format of a parsed namespace, defaults filled in"""
    return {
        'variant': TheoryVariant(ns.theory or DEFAULT_THEORY),
        'cz': CzChoice(ns.cz or DEFAULT_CZ),
        'format': ns.format or default_format(),
    }


def _check_flags(ns):
    allowed = ALLOWED_FLAGS[ns.command]
    for flag in SHARED_FLAGS:
        if getattr(ns, flag) is not None and flag not in allowed:
            raise UsageError(f"--{flag} does not apply to {ns.command}")


def _conjunctions(texts, expected_n=None, allow_empty=False):
    """Propositions from several conjunction or proposition arguments, one system count"""
    props = []
    for text in texts:
        parsed = parse_conjunction(text, expected_n, allow_empty)
        if parsed and expected_n is None:
            expected_n = parsed[0].n
        props.extend(parsed)
    return tuple(props)


def register_eval_command(subparsers, parents):
    s = subparsers.add_parser('eval', parents=parents, help="truth table of a formula, or a logical check")
    s.add_argument('formula', help="formula over lowercase atoms, e.g. 'p ∧ ¬p'")
    check = s.add_mutually_exclusive_group()
    check.add_argument('--equiv', metavar='G', help="check formula ⇔ G on every assignment")
    check.add_argument('--implies', metavar='G', help="check formula ⇒ G on every assignment")
    s.set_defaults(build=lambda ns: Eval(ns.formula, ns.equiv, ns.implies, _options(ns)['format']))


def register_laws_command(subparsers, parents):
    s = subparsers.add_parser('laws', parents=parents, help="check the law suite")
    s.add_argument('--tables', action='store_true', help="print every law's truth table")
    s.set_defaults(build=lambda ns: Laws(ns.tables, _options(ns)['format']))


def register_reduce_command(subparsers, parents):
    s = subparsers.add_parser('reduce', parents=parents, help="Clifford reduction to single-system form")
    s.add_argument('props', nargs='+', help="propositions or conjunctions, e.g. '<XYZIZY>' or '<XZ,ZX>'")
    s.set_defaults(build=lambda ns: Reduce(_conjunctions(ns.props), **_options(ns)))


def register_predict_command(subparsers, parents):
    s = subparsers.add_parser('predict', parents=parents, help="truth value a conjunction predicts for a query")
    s.add_argument('generators', help="conjunction, e.g. '<XZ,ZX>' ('<>' for none)")
    s.add_argument('query', help="proposition, e.g. '<YY>'")

    def build(ns):
        query = parse_prop(ns.query)
        return Predict(_conjunctions([ns.generators], query.n, allow_empty=True), query, **_options(ns))

    s.set_defaults(build=build)


def register_closure_command(subparsers, parents):
    s = subparsers.add_parser('closure', parents=parents, help="every proposition a conjunction predicts")
    s.add_argument('generators', help="non-empty conjunction, e.g. '<XX,ZZ>'")
    s.set_defaults(build=lambda ns: Closure(_conjunctions([ns.generators]), **_options(ns)))


def register_apply_command(subparsers, parents):
    s = subparsers.add_parser('apply', parents=parents, help="carry propositions through a transcript")
    s.add_argument('props', help="conjunction, e.g. '<XI,IZ>'")
    s.add_argument('transcript', help="gates with 1-based systems, e.g. 'S@2; H@1; CZ@(1,2)'")
    s.set_defaults(build=lambda ns: Apply(
        _conjunctions([ns.props]), parse_transcript(ns.transcript), **_options(ns)
    ))


def register_measure_command(subparsers, parents):
    s = subparsers.add_parser('measure', parents=parents, help="ask questions of a state in order")
    s.add_argument('generators', help="conjunction, '<>' for none")
    s.add_argument('questions', nargs='+', help="propositions asked in order; their signs are ignored")

    def build(ns):
        questions = tuple(parse_prop(text) for text in ns.questions)
        n = questions[0].n
        for text, q in zip(ns.questions, questions):
            if q.n != n:
                raise UsageError(f"question {text} has {q.n} systems, expected {n}")
        generators = _conjunctions([ns.generators], n, allow_empty=True)
        return Measure(generators, questions, ns.seed, **_options(ns))

    s.set_defaults(build=build)


def register_pm_command(subparsers, parents):
    s = subparsers.add_parser('pm', parents=parents, help="contextuality check on the magic square")

    def build(ns):
        options = _options(ns)
        return Pm(options['variant'], options['format'])

    s.set_defaults(build=build)


def register_consistency_command(subparsers, parents):
    s = subparsers.add_parser('consistency', parents=parents, help="derive ⟨YIY⟩ along two routes")

    def build(ns):
        options = _options(ns)
        return Consistency(options['cz'], options['format'])

    s.set_defaults(build=build)


def register_bench_command(subparsers, parents):
    s = subparsers.add_parser('bench', parents=parents, help="time reduction and closure on random states")
    s.add_argument('--n', type=int, default=BENCH_DEFAULT_N, help="systems per state")
    s.add_argument('--generators', type=int, default=BENCH_DEFAULT_GENERATORS, help="generators per state")
    s.add_argument('--repetitions', type=int, default=BENCH_DEFAULT_REPETITIONS, help="timed states")
    s.add_argument('--dense', action='store_true', help="generators with support of order n")

    def build(ns):
        if ns.n < 1 or ns.generators < 0:
            raise UsageError("bench needs --n >= 1 and --generators >= 0")
        seed = 0 if ns.seed is None else ns.seed
        return Bench(ns.n, ns.generators, ns.repetitions, seed, dense=ns.dense, **_options(ns))

    s.set_defaults(build=build)


def register_all_commands(subparsers, parents):
    """
    Register every subcommand

    Args:
        subparsers: argparse sub-parser action
        parents (list): parsers whose flags every subcommand inherits
    """
    register_eval_command(subparsers, parents)
    register_laws_command(subparsers, parents)
    register_reduce_command(subparsers, parents)
    register_predict_command(subparsers, parents)
    register_closure_command(subparsers, parents)
    register_apply_command(subparsers, parents)
    register_measure_command(subparsers, parents)
    register_pm_command(subparsers, parents)
    register_consistency_command(subparsers, parents)
    register_bench_command(subparsers, parents)


def build_parser():
    parser = _ArgumentParser(prog='conjlogic', description="Three-valued logic of conjugate propositions")
    subparsers = parser.add_subparsers(dest='command', metavar='<subcommand>', parser_class=_ArgumentParser)
    subparsers.required = True
    register_all_commands(subparsers, [_shared_parser()])
    return parser


def parse_command(argv):
    """
    Parse command-line arguments into a command

    Args:
        argv (list[str]): arguments without the program name

    Returns:
        one of Eval, Laws, Reduce, Predict, Closure, Apply, Measure, Pm,
        Consistency, Bench

    Raises:
        UsageError: unknown subcommand, missing argument or conflicting flags
        PropParseError: malformed proposition, with its character position
    """
    ns = build_parser().parse_args(argv)
    _check_flags(ns)
    return ns.build(ns)


# =============================================================================
# DISPATCH
# =============================================================================

@dataclass(frozen=True)
class _Output:
    data: object
    text: str
    exit_code: int = 0
    message: str = ""


def _run_eval(cmd):
    other = cmd.equiv if cmd.equiv is not None else cmd.implies
    if other is None:
        (formula,), names = parse_formula(cmd.formula)
        df = formula_table([formula], names)
        data = {'atoms': list(names), 'formula': formula.render(names), 'rows': df.to_dict(orient='records')}
        return _Output(data, layout.formula_table_text(df))

    (lhs, rhs), names = parse_formula(cmd.formula, other)
    relation = "equiv" if cmd.equiv is not None else "implies"
    result = logically_equivalent(lhs, rhs) if relation == "equiv" else logically_implies(lhs, rhs)
    counterexample = None
    if not result.holds:
        counterexample = {names[i]: v.symbol for i, v in sorted(result.counterexample.items())}
    data = {
        'relation': relation,
        'lhs': lhs.render(names),
        'rhs': rhs.render(names),
        'holds': result.holds,
        'counterexample': counterexample,
    }
    return _Output(data, layout.check_text(relation, lhs.render(names), rhs.render(names), result, names))


def _run_laws(cmd):
    if cmd.tables:
        tables = law_report()
        return _Output(tables.to_dict(), layout.laws_text(tables.report, tables.tables))
    report = law_report().report
    return _Output(report.to_dict(), layout.laws_text(report))


def _run_reduce(cmd):
    props = cmd.props
    if len(props) == 1:
        result = reduce_single(props[0], cmd.variant, cmd.cz)
    elif len(props) == 2:
        result = reduce_pair(props[0], props[1], cmd.variant, cmd.cz)
    else:
        result = reduce_set(props, cmd.variant, cmd.cz)
    return _Output(result.to_dict(), layout.reduction_text(result))


def _run_predict(cmd):
    state = KnowledgeState.from_generators(cmd.query.n, cmd.generators, cmd.variant, cmd.cz)
    value = state.predicts(cmd.query)
    data = {'query': cmd.query.to_dict(), 'value': value.symbol, 'state': state.to_dict()}
    return _Output(data, f"{value.symbol}\n")


def _run_closure(cmd):
    state = KnowledgeState.from_generators(cmd.generators[0].n, cmd.generators, cmd.variant, cmd.cz)
    members = sorted_closure(state)
    data = {'state': state.to_dict(), 'closure': [p.to_dict() for p in members]}
    return _Output(data, layout.props_text(members))


def _run_apply(cmd):
    images = apply_transcript_many(cmd.props, cmd.transcript, cmd.variant, cmd.cz, n=cmd.props[0].n)
    data = {'transcript': cmd.transcript.to_list(), 'images': [p.to_dict() for p in images]}
    return _Output(data, layout.props_text(images))


def _run_measure(cmd):
    n = cmd.questions[0].n
    state = KnowledgeState.from_generators(n, cmd.generators, cmd.variant, cmd.cz)
    rng = None if cmd.seed is None else np.random.default_rng(cmd.seed)
    records, state = measure_sequence(state, cmd.questions, rng)
    data = {'records': [r.to_dict() for r in records], 'state': state.to_dict()}
    return _Output(data, layout.measurement_text(records, state))


def _run_pm(cmd):
    report = pm_square(cmd.variant)
    return _Output(report.to_dict(), layout.pm_text(report))


def _run_consistency(cmd):
    report = cz_consistency_check(cmd.cz)
    if not report.contradiction_found:
        return _Output(report.to_dict(), layout.consistency_text(report))
    clash = " and ".join(str(p) for p in report.derived)
    message = f"contradiction: the {cmd.cz.value} CZ derives both {clash}\n"
    return _Output(report.to_dict(), layout.consistency_text(report), exit_code=2, message=message)


def _run_bench(cmd):
    report = run_bench(cmd.n, cmd.generators, cmd.repetitions, cmd.variant, cmd.cz, cmd.seed, cmd.dense)
    return _Output(report.to_dict(), layout.bench_text(report))


_HANDLERS = {
    Eval: _run_eval,
    Laws: _run_laws,
    Reduce: _run_reduce,
    Predict: _run_predict,
    Closure: _run_closure,
    Apply: _run_apply,
    Measure: _run_measure,
    Pm: _run_pm,
    Consistency: _run_consistency,
    Bench: _run_bench,
}


def run(cmd):
    """
    Execute a parsed command

    Args:
        cmd: a command from parse_command

    Returns:
        CommandResult: exit code 0 on success, 2 on a contradiction or
        poisoned state, 1 on usage and parse errors; rendered output
    """
    try:
        out = _HANDLERS[type(cmd)](cmd)
    except ConjLogicError as e:
        logger.debug(f"{type(cmd).__name__} failed: {e!r}")
        return CommandResult(e.exit_code, stderr=f"error: {e}\n")
    stdout = layout.render_json(out.data) if cmd.format == 'json' else out.text
    return CommandResult(out.exit_code, stdout, out.message)


def execute(argv):
    """parse_command then run; parse errors become a CommandResult as well"""
    try:
        cmd = parse_command(argv)
    except ConjLogicError as e:
        return CommandResult(e.exit_code, stderr=f"error: {e}\n")
    return run(cmd)


def main(argv=None):
    logging.basicConfig(level=LOG_LEVEL, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    result = execute(sys.argv[1:] if argv is None else list(argv))
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code
