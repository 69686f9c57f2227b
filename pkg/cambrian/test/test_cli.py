#! /usr/bin/env python3

import json

from cambrian.cli import main
from cambrian.notation import load_system, parse_gamma
from cambrian.report import diagram_document, make_config
from cambrian.semilattice import build_cambrian
from cambrian.shelling import label_edge


def test_sortword(capsys):
    assert main(['sortword', '--system', 'A4', 's1,s2,s1,s4']) == 0
    assert capsys.readouterr().out == 's1 s2 s4 | s1\nalpha: 1 2 4 5\nsortable: true\n'


def test_sortword_identity(capsys):
    assert main(['sortword', 'e']) == 0
    assert capsys.readouterr().out.split('\n')[:3] == ['', 'alpha: ', 'sortable: true']


def test_sortword_not_sortable(capsys):
    assert main(['sortword', '--gamma', 's1,s2,s3', 's2,s3,s2,s1']) == 0
    out = capsys.readouterr().out
    assert 'alpha: 2 3 5 7' in out
    assert out.endswith('sortable: false\n')


def test_sortable(capsys):
    assert main(['sortable']) == 0
    assert len(capsys.readouterr().out.splitlines()) == 14
    assert main(['sortable', '--system', 'B3', 's2,s3,s2,s3', 's3,s2']) == 0
    assert capsys.readouterr().out.splitlines() == ['s2,s3,s2,s3: true', 's3,s2: false']


def test_project(capsys):
    assert main(['project', 's2,s3,s2,s1']) == 0
    assert capsys.readouterr().out == 's2,s3,s2,s1 -> s2,s3,s2\n'


def test_build(tmp_path, capsys):
    out = str(tmp_path / 'a3.jsonl')
    assert main(['build', '--out', out, '--jobs', '3']) == 0
    with open(out) as handle:
        records = [json.loads(line) for line in handle]
    with open(out + '.summary.json') as handle:
        summary = json.load(handle)
    assert len(records) == summary['intervals'] == 68
    assert summary['elements'] == 14
    assert summary['el_pass_rate'] == 1.0
    assert summary['spanning_tree_verified']
    assert sum(summary['mobius_histogram'].values()) == 68
    assert json.loads(capsys.readouterr().out) == summary


def test_build_is_deterministic(tmp_path):
    first, second = str(tmp_path / 'one'), str(tmp_path / 'two')
    assert main(['build', '--system', 'B3', '--out', first]) == 0
    assert main(['build', '--system', 'B3', '--out', second, '--jobs', '4']) == 0
    with open(first) as a, open(second) as b:
        assert a.read() == b.read()


def test_build_infinite(capsys):
    assert main(['build', '--system', 'A2-affine', '--cap', '5']) == 0
    assert '"el_pass_rate": 1.0' in capsys.readouterr().out


def test_interval_commands(capsys):
    assert main(['homotopy', '--system', 'B3']) == 0
    assert capsys.readouterr().out == 'sphere(1)\n'
    assert main(['mobius', '--upper', 's1,s2,s1']) == 0
    assert capsys.readouterr().out == 'recursive: 1\norder complex: 1\nfalling chains: 1\n'
    assert main(['elcheck', '--lower', 's1', '--upper', 's1,s2,s3']) == 0
    assert capsys.readouterr().out.endswith('EL: passed\n')
    assert main(['interval', '--upper', 's1,s3']) == 0
    record = json.loads(capsys.readouterr().out)
    assert record['size'] == 4
    assert record['mobius_recursive'] == 1
    assert record['homotopy'] == 'sphere(0)'


def test_fibers(capsys):
    assert main(['fibers']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 14
    assert lines[0] == 'e: e'


def test_invariance(capsys):
    assert main(['invariance', '--system', 'B3', '--gamma', 's1,s3,s2']) == 0
    out = capsys.readouterr().out
    assert 'words: s1,s3,s2 s3,s1,s2' in out
    assert out.endswith('consistent: true\n')


def test_export(tmp_path, capsys):
    out = str(tmp_path / 'a3.dot')
    assert main(['export', '--out', out]) == 0
    assert capsys.readouterr().out == 'Wrote 14 nodes and 21 edges to {}\n'.format(out)
    with open(out) as handle:
        assert 'digraph cambrian {' in handle.read()
    assert main(['build', '--format', 'diagram']) == 0
    assert 'rank=same' in capsys.readouterr().out


def test_diagram_labels():
    system = load_system('B3')
    P = build_cambrian(parse_gamma(system), 9)
    document = diagram_document(P)
    assert len(document.nodes) == 20
    assert len(document.edges) == 30
    for (_, _, label), (u, v) in zip(document.edges, P.hasse_edges()):
        assert label == label_edge(u, v, P.gamma)
    assert document.nodes[0][1] == 'e'


def test_fiber_diagram():
    config = make_config('A3')
    P = build_cambrian(config.gamma, config.cap)
    document = diagram_document(P, fibers=True)
    assert len(document.nodes) == 24
    assert len(document.classes) == 14
    assert len(document.edges) == 36
    assert 'fillcolor' in document.source


def test_errors(capsys):
    assert main(['sortword', 's1,s9']) == 2
    assert "'s9'" in capsys.readouterr().err
    assert main(['build', '--gamma', 's1,s2']) == 2
    assert main(['build', '--cap', '-1']) == 2
    assert main(['interval', '--upper', 's2,s1']) == 2
    assert main(['fibers', '--system', 'A2-affine']) == 2
    assert main(['build', '--system', 'no-such-file.json']) == 2
    assert main(['export', '--out', '/no/such/dir/a.dot']) == 2


def test_bad_generator_names(tmp_path, capsys):
    path = tmp_path / 'numbers.json'
    path.write_text('{"generators": [1, 2], "matrix": [[1, 3], [3, 1]]}')
    assert main(['sortable', '--system', str(path)]) == 2
    assert 'not a string' in capsys.readouterr().err
