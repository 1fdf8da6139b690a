"""Command line front end.

Every report starts with a header line carrying the caps and budgets.
Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
3 resource budget exceeded.
"""

from __future__ import annotations

import functools
import sys
import time

import click

from .classes import ArityCaps, Budgets, generate_clone_level
from .constraints import ConstraintSet, class_satisfies, satisfies
from .core import canonical_order
from .errors import BudgetExceeded, DomainMismatch, ShapeError, WorkspaceError
from .galois import closure_of_class, closure_of_constraints, separating_constraint
from .invariants import generate_invariant
from .minors import is_conjunctive_minor, is_extensive, is_restrictive, tight_minor, tight_minor_constraint
from .verify import SUITES, verify
from .workspace import load_workspace

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FN_CAP, REL_CAP = 3, 4


class Negative(Exception):
    """A well-formed query whose answer is no."""


def _fail(message, code):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            fn(*args, **kwargs)
        except Negative:
            sys.exit(EXIT_NEGATIVE)
        except BudgetExceeded as exc:
            _fail(exc, EXIT_BUDGET)
        except (WorkspaceError, ShapeError, DomainMismatch, ValueError, KeyError, OSError) as exc:
            text = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
            _fail(text, EXIT_USAGE)

    return wrapper


def _budget_options(fn):
    options = [
        click.option("--fn-cap", type=click.IntRange(min=1), default=None, help=f"Function arity cap [{FN_CAP}]."),
        click.option("--rel-cap", type=click.IntRange(min=1), default=None, help=f"Relation arity cap [{REL_CAP}]."),
        click.option("--max-subsets", type=click.IntRange(min=1), default=2**16, show_default=True),
        click.option("--max-skolem", type=click.IntRange(min=1), default=3**6, show_default=True),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _workspace_option(fn):
    return click.option(
        "-w", "--workspace", "workspace", required=True, type=click.Path(dir_okay=False), help="Workspace file."
    )(fn)


def _settings(fn_cap, rel_cap, max_subsets, max_skolem, default=None):
    default = default or ArityCaps(FN_CAP, REL_CAP)
    caps = ArityCaps(fn_cap or default.fn_arity_cap, rel_cap or default.rel_arity_cap)
    return caps, Budgets(max_subsets, max_skolem)


def _header(command, caps, budgets):
    click.echo(
        f"# clonecraft {command} fn-cap={caps.fn_arity_cap} rel-cap={caps.rel_arity_cap} "
        f"max-subsets={budgets.max_subsets} max-skolem={budgets.max_skolem}"
    )


def _verdict(ok, yes, no):
    click.echo(yes if ok else no)
    if not ok:
        raise Negative


def _names(text):
    return [x for x in text.split(",") if x]


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="clonecraft")
def main():
    """Finite clones, invariants and relational constraints."""


@main.command()
@_workspace_option
@click.option("--clone", "clone_name", required=True)
@click.option("--arity", type=click.IntRange(min=1), required=True)
@click.option("--domain", "domain_name", default=None, help="Domain for the builtin clone P.")
@_budget_options
@_guarded
def clonegen(workspace, clone_name, arity, domain_name, **budget):
    """List the members of given arity of a clone."""
    ws = load_workspace(workspace)
    size = None
    if domain_name is not None:
        if domain_name not in ws.domains:
            raise WorkspaceError(f"unknown domain {domain_name!r}")
        size = ws.domains[domain_name]
    spec = ws.clone(clone_name, size)
    caps, budgets = _settings(**budget)
    _header("clonegen", caps, budgets)
    level = generate_clone_level(spec, arity)
    click.echo(f"clone {clone_name} arity {arity}: {len(level)} members")
    for f in canonical_order(level):
        click.echo(str(f))


@main.command()
@_workspace_option
@click.option("--clone", "clone_name", required=True)
@click.option("--relation", "relation_name", required=True)
@_budget_options
@_guarded
def invgen(workspace, clone_name, relation_name, **budget):
    """Smallest invariant of a clone containing a relation."""
    ws = load_workspace(workspace)
    R = ws.relation(relation_name)
    spec = ws.clone(clone_name, R.dom)
    caps, budgets = _settings(**budget)
    _header("invgen", caps, budgets)
    click.echo(str(generate_invariant(spec, R)))


@main.command("satisfies")
@_workspace_option
@click.option("--function", "function_name", default=None)
@click.option("--class", "class_name", default=None)
@click.option("--constraint", "constraint_name", required=True)
@_budget_options
@_guarded
def satisfies_cmd(workspace, function_name, class_name, constraint_name, **budget):
    """Does a function (or every member of a class) satisfy a constraint?"""
    if (function_name is None) == (class_name is None):
        raise click.UsageError("give exactly one of --function and --class")
    ws = load_workspace(workspace)
    c = ws.constraint(constraint_name)
    caps, budgets = _settings(**budget)
    _header("satisfies", caps, budgets)
    if function_name is not None:
        ok = satisfies(ws.function(function_name), c)
    else:
        ok = class_satisfies(ws.function_class(class_name), c)
    _verdict(ok, "satisfies", "does not satisfy")


@main.command()
@_workspace_option
@click.option("--scheme", "scheme_name", required=True)
@click.option("--family", required=True, help="Comma list of relation or constraint names.")
@click.option("--candidate", default=None, help="Relation or constraint to test against the tight minor.")
@_budget_options
@_guarded
def minor(workspace, scheme_name, family, candidate, **budget):
    """Tight conjunctive minor of a family of relations or constraints."""
    ws = load_workspace(workspace)
    scheme = ws.scheme(scheme_name)
    names = _names(family)
    if not names:
        raise click.UsageError("--family is empty")
    caps, budgets = _settings(**budget)
    if all(n in ws.relations for n in names):
        members = [ws.relation(n) for n in names]
        _header("minor", caps, budgets)
        click.echo(f"tight minor {tight_minor(members, scheme, budgets)}")
        if candidate is not None:
            R = ws.relation(candidate)
            restrictive = is_restrictive(R, members, scheme, budgets)
            extensive = is_extensive(R, members, scheme, budgets)
            click.echo(f"restrictive {'yes' if restrictive else 'no'}")
            click.echo(f"extensive {'yes' if extensive else 'no'}")
            _verdict(restrictive and extensive, "tight", "not tight")
        return
    members = [ws.constraint(n) for n in names]
    _header("minor", caps, budgets)
    click.echo(f"tight minor {tight_minor_constraint(members, scheme, budgets)}")
    if candidate is not None:
        ok = is_conjunctive_minor(ws.constraint(candidate), members, scheme, budgets)
        _verdict(ok, "conjunctive minor", "not a conjunctive minor")


def _clones(ws, c1, c2, a, b):
    return ws.clone(c1, a), ws.clone(c2, b)


@main.command("closure-class")
@_workspace_option
@click.option("--class", "class_name", required=True)
@click.option("--c1", default="P", show_default=True)
@click.option("--c2", default="P", show_default=True)
@_budget_options
@_guarded
def closure_class(workspace, class_name, c1, c2, **budget):
    """Functions satisfying every (C1, C2)-constraint the class satisfies."""
    ws = load_workspace(workspace)
    K = ws.function_class(class_name)
    spec1, spec2 = _clones(ws, c1, c2, K.dom, K.cod)
    caps, budgets = _settings(**budget)
    _header("closure-class", caps, budgets)
    report = closure_of_class(K, spec1, spec2, caps, budgets)
    closed = report.closed
    click.echo(f"exact {'yes' if report.exact_within_caps else 'no'}")
    click.echo(f"closed {'yes' if closed == K else 'no'}")
    click.echo(f"members {len(closed)}")
    for f in canonical_order(closed):
        click.echo(str(f))


@main.command("closure-constraints")
@_workspace_option
@click.option("--constraints", "constraint_names", required=True, help="Comma list of constraint names.")
@click.option("--c1", default="P", show_default=True)
@click.option("--c2", default="P", show_default=True)
@_budget_options
@_guarded
def closure_constraints(workspace, constraint_names, c1, c2, **budget):
    """Constraints satisfied by every function that satisfies the given ones."""
    ws = load_workspace(workspace)
    names = _names(constraint_names)
    if not names:
        raise click.UsageError("--constraints is empty")
    members = [ws.constraint(n) for n in names]
    a, b = members[0].a_size, members[0].b_size
    T0 = ConstraintSet(a, b, frozenset(members))
    spec1, spec2 = _clones(ws, c1, c2, a, b)
    caps, budgets = _settings(**budget)
    _header("closure-constraints", caps, budgets)
    report = closure_of_constraints(T0, spec1, spec2, caps, budgets)
    click.echo(f"exact {'yes' if report.exact_within_caps else 'no'}")
    click.echo(f"members {len(report.closed)}")
    for c in report.closed.ordered():
        click.echo(str(c))


@main.command()
@_workspace_option
@click.option("--class", "class_name", required=True)
@click.option("--function", "function_name", required=True)
@click.option("--c1", default="P", show_default=True)
@click.option("--c2", default="P", show_default=True)
@_budget_options
@_guarded
def separate(workspace, class_name, function_name, c1, c2, **budget):
    """A constraint satisfied by the class and failed by the function."""
    ws = load_workspace(workspace)
    K = ws.function_class(class_name)
    g = ws.function(function_name)
    spec1, spec2 = _clones(ws, c1, c2, K.dom, K.cod)
    caps, budgets = _settings(**budget)
    _header("separate", caps, budgets)
    c = separating_constraint(K, g, spec1, spec2, caps)
    if c is None:
        _verdict(False, "", "not separable")
    click.echo(f"antecedent {c.antecedent}")
    click.echo(f"consequent {c.consequent}")


@main.command("verify")
@click.argument("suite")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--cases", type=click.IntRange(min=0), default=None)
@_budget_options
@_guarded
def verify_cmd(suite, seed, cases, **budget):
    """Run a named property battery."""
    if suite not in SUITES:
        raise click.UsageError(f"unknown suite {suite!r}; known: {', '.join(sorted(SUITES))}")
    caps, budgets = _settings(**budget, default=SUITES[suite][2])
    _header("verify", caps, budgets)
    start = time.perf_counter()
    result = verify(suite, seed, caps, budgets, cases)
    click.echo(f"wall time {time.perf_counter() - start:.2f}s", err=True)
    click.echo(result.report())
    if not result.passed:
        raise Negative


def run(argv=None) -> int:
    """Run the CLI in-process and return its exit code."""
    try:
        main.main(args=argv, prog_name="clonecraft", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        return EXIT_USAGE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    main()
