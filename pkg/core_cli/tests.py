import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from core_cli import syntax as s
from core_cli.corpus import CorpusRegistry
from core_cli.driver import CHECK, TRANSLATE, TRANSPORT, Session, run_decls
from core_cli.elaborator import elaborate
from core_cli.models import ItemReport, Run
from core_cli.parser import parse_file, parse_module
from core_cli.printer import print_module, show
from core_cli.reports import FAIL, JSON_LINES, OK, Report, emit_report, exit_code
from core_kernel.builder import arrow, c, lam
from core_kernel.errors import ParseError, UnknownScope, UnresolvedName
from core_kernel.terms import PrimInt16
from core_stdlib.corpus_config import get_corpus_files
from core_stdlib.literals import mk_N, mk_nat
from core_stdlib.loader import load_prelude

NAT_N = """
relate type nat N via equiv_nat_N rel R_nat_N coh coh_nat_N
relate term O N0 by O_R
relate term S succ_N by S_R
relate term plus plus_N by plus_R
relate term mult mult_N by mult_R
"""


@pytest.fixture(scope='module')
def env():
    return load_prelude()


def write(tmp_path, text, name='input.upt'):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)


# parsing

def test_empty_module():
    assert parse_module('') == []
    assert parse_module('# only a comment\n') == []


def test_parse_definition():
    (decl,) = parse_module('def two : nat := S (S O)')
    assert decl == s.Def('two', s.Ref('nat'), s.Apply(s.Ref('S'), s.Apply(s.Ref('S'), s.Ref('O'))))


def test_arrows_associate_to_the_right():
    (decl,) = parse_module('axiom f : nat -> nat -> nat')
    assert decl.type == s.Arrow(s.Ref('nat'), s.Arrow(s.Ref('nat'), s.Ref('nat')))


def test_parse_relations_and_transport():
    decls = parse_module("""
        relate term nat_rect@{0} N_peano_rect@{0} by trusted nat_rect_R0
        relate term O N0 by O_R
        transport square_N from square whitebox
        transport plus_N_comm from plus_comm
        goal g1 : eq bool true true by compute
    """)
    assumed, plain, white, black, goal = decls
    assert assumed == s.RelateTerm(s.Ref('nat_rect', (0,)), s.Ref('N_peano_rect', (0,)),
                                   s.Ref('nat_rect_R0'), assumed=True)
    assert not plain.assumed
    assert white.mode == s.WHITEBOX
    assert black.mode == s.BLACKBOX
    assert isinstance(goal, s.Goal)
    assert s.decl_name(assumed) == 'nat_rect ≈ N_peano_rect'


def test_literals_and_universes():
    (decl,) = parse_module("def ty : Type@{1} := (3 : N)")
    assert decl.type == s.Universe(1)
    assert decl.body == s.Annot(s.Num(3), s.Ref('N'))


def test_parse_error_has_a_position():
    with pytest.raises(ParseError) as exc:
        parse_module('def broken : := O')
    assert exc.value.line == 1


def test_parse_error_at_end_of_input():
    with pytest.raises(ParseError):
        parse_module('def broken : nat :=')


@pytest.mark.parametrize('path', get_corpus_files(), ids=lambda p: p.name)
def test_corpus_prints_back_to_itself(path):
    decls = parse_file(path)
    assert decls
    assert parse_module(print_module(decls)) == decls


# printing kernel terms

def test_show_kernel_terms():
    nat = c('nat')
    assert show(lam('x', nat, lambda x: x)) == 'fun x : nat => x'
    assert show(arrow(arrow(nat, nat), nat)) == '(nat -> nat) -> nat'
    assert show(PrimInt16(8)) == '(8 : int16)'
    assert show(c('eq', 0)) == 'eq@{0}'


# elaboration

def test_literals_take_their_scope_from_context(env):
    assert elaborate(env, s.Annot(s.Num(6), s.Ref('N'))) == mk_N(6)
    assert elaborate(env, s.Apply(s.Ref('S'), s.Num(2))) == mk_nat(3)
    assert elaborate(env, s.Annot(s.Num(7), s.Ref('int16'))) == PrimInt16(7)


def test_literal_without_scope(env):
    with pytest.raises(UnknownScope):
        elaborate(env, s.Num(3))
    with pytest.raises(UnknownScope):
        elaborate(env, s.Annot(s.Num(3), s.Universe(0)))


def test_unresolved_name(env):
    with pytest.raises(UnresolvedName) as exc:
        elaborate(env, s.Ref('nope', line=4, column=2))
    assert exc.value.name == 'nope'


def test_binders_shadow_globals(env):
    (decl,) = parse_module('def k : nat -> nat := fun S : nat => S')
    assert elaborate(env, decl.body) == lam('S', c('nat'), lambda x: x)
    assert elaborate(env, s.Ref('eq')) == c('eq', 0)


# driver

def test_check_reports_abstraction_results():
    reports = run_decls(parse_module(NAT_N + """
        def double : nat -> nat := fun n : nat => plus n n
        def seven : nat := 7
    """), CHECK)
    assert [(r.name, r.status) for r in reports] == [('double', OK), ('seven', OK)]
    assert all(r.mode == 'abstraction' for r in reports)


def test_translate_reports_the_derived_prime():
    (report,) = run_decls(parse_module(NAT_N + 'def sq : nat -> nat := fun x : nat => mult x x'),
                          TRANSLATE)
    assert report.ok
    assert report.derived == 'fun x : N => mult_N x x'


def test_failures_become_reports():
    reports = run_decls(parse_module("""
        def x : nat := O
        def x : nat := O
        def y : nat := 3 O
        def z : Type := 3
        def w : nat := missing
    """), CHECK)
    assert [r.status for r in reports] == [OK, FAIL, FAIL, FAIL, FAIL]
    assert 'already declared' in reports[1].message
    assert exit_code(reports) == 1


def test_transport_reports_axioms_and_type():
    reports = run_decls(parse_module(NAT_N + 'transport plus_N_comm from plus_comm'), TRANSPORT)
    (report,) = reports
    assert report.status == OK
    assert report.mode == 'blackbox'
    assert report.derived.startswith('plus_N_comm : forall ')
    assert 'eq@{0} N (plus_N ' in report.derived


def test_session_keeps_declarations():
    session = Session()
    run_decls(parse_module(NAT_N + 'transport square_N from square whitebox'), TRANSPORT,
              session=session)
    assert 'square_N' in session.env
    assert session.registry.delta.find('plus').right == 'plus_N'


# reports

def test_json_lines_format():
    reports = [Report('a', OK, 'abstraction', 12), Report('b', FAIL, axioms=('funext',))]
    lines = emit_report(reports, JSON_LINES).splitlines()
    assert json.loads(lines[0]) == {'name': 'a', 'status': 'ok', 'steps': 12, 'axioms': [],
                                    'mode': 'abstraction'}
    assert json.loads(lines[1])['axioms'] == ['funext']


def test_text_format_has_a_footer():
    text = emit_report([Report('a', OK), Report('b', FAIL, message='boom')])
    assert text.endswith('2 items, 1 failed\n')
    assert '❌ b' in text and 'boom' in text


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report([], 'yaml')


# management commands

def test_check_command(tmp_path):
    path = write(tmp_path, NAT_N + 'def add3 : nat -> nat := fun n : nat => plus n 3\n')
    out = StringIO()
    call_command('uptrans', 'check', path, stdout=out)
    assert '✅ add3' in out.getvalue()
    assert '1 items, 0 failed' in out.getvalue()


def test_failing_item_sets_the_exit_code(tmp_path):
    path = write(tmp_path, 'def bad : nat := true\n')
    with pytest.raises(CommandError) as exc:
        call_command('uptrans', 'check', path, stdout=StringIO())
    assert exc.value.returncode == 1


def test_usage_errors(tmp_path):
    with pytest.raises(CommandError) as exc:
        call_command('uptrans', 'check', stdout=StringIO())
    assert exc.value.returncode == 2
    with pytest.raises(CommandError) as exc:
        call_command('uptrans', 'check', write(tmp_path, 'def : nat'), stdout=StringIO())
    assert exc.value.returncode == 2
    with pytest.raises(CommandError) as exc:
        call_command('uptrans', 'check', str(tmp_path / 'missing.upt'), stdout=StringIO())
    assert exc.value.returncode == 2


def test_json_lines_output_is_deterministic(tmp_path):
    path = write(tmp_path, NAT_N + 'transport square_N from square whitebox\n')
    first, second = StringIO(), StringIO()
    call_command('uptrans', 'transport', path, '--format', 'json-lines', stdout=first)
    call_command('uptrans', 'transport', path, '--format', 'json-lines', stdout=second)
    assert first.getvalue() == second.getvalue()
    record = json.loads(first.getvalue())
    assert record['name'] == 'square_N' and record['mode'] == 'whitebox'


def test_bench_compares_both_routes(tmp_path):
    relations = str(get_corpus_files()[0])
    path = write(tmp_path, 'goal poly_50 : eq bool (leb_nat 1000 (poly 50)) true by compute\n')
    out = StringIO()
    call_command('uptrans', 'bench', relations, path, '--budget', '2000000',
                 '--format', 'json-lines', stdout=out)
    records = {r['name']: r for r in map(json.loads, out.getvalue().splitlines())}
    assert records['poly_50 [direct]']['status'] == 'inconclusive'
    assert records['poly_50 [replaced]']['status'] == 'ok'


def test_replay_of_the_embedded_corpus():
    out = StringIO()
    call_command('uptrans', 'replay', '--format', 'json-lines', stdout=out)
    records = {r['name']: r for r in map(json.loads, out.getvalue().splitlines())}
    assert all(r['status'] != 'fail' for r in records.values())
    assert 'funext' in records["g'"]['axioms']
    assert records['square_N']['axioms'] == []
    assert records['poly_50']['status'] == 'ok'
    assert records['nat ⋈ N']['mode'] == 'relate'


@pytest.mark.django_db
def test_saved_runs(tmp_path):
    path = write(tmp_path, 'def nat_zero : nat := O\ndef broken : nat := tt\n')
    with pytest.raises(CommandError):
        call_command('uptrans', 'check', path, '--save', stdout=StringIO(), stderr=StringIO())
    saved = Run.objects.get()
    assert saved.status == 'fail'
    assert saved.item_count == 2
    assert [i.name for i in saved.failed_items()] == ['broken']
    assert ItemReport.objects.filter(run=saved, status='ok').count() == 1


def test_export_prelude_command(tmp_path):
    out = StringIO()
    call_command('export_prelude', stdout=out)
    assert 'def plus : nat -> nat -> nat := ' in out.getvalue()
    target = tmp_path / 'prelude.upt'
    call_command('export_prelude', '--output', str(target), stdout=StringIO())
    assert target.read_text(encoding='utf-8') == out.getvalue()


def test_corpus_discovery():
    corpus = CorpusRegistry()
    assert corpus.get_app_names() == ['Standard library']
    assert corpus.get_corpus_files() == get_corpus_files()
    assert '📚' in corpus.describe()
