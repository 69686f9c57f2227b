# coding: utf-8
"""Run configuration, interval report streams and diagram export.

Reports are JSON, one interval per line with sorted keys, so that two
runs over the same input give byte-identical files.  Diagrams are
Graphviz DOT text made with the ``graphviz`` package; nothing is
rendered here.
"""
import collections
import concurrent.futures
import itertools
import json
import logging

import graphviz

from cambrian.coxeter import element_key, enumerate_elements, is_finite, longest_element, right_descents
from cambrian.notation import load_system, parse_gamma
from cambrian.semilattice import BadCapError, ClosedInterval
from cambrian.shelling import analyse_interval, label_edge
from cambrian.sortable import congruence_fibers, sorting_word

__all__ = ['RunConfig', 'DiagramDocument', 'make_config', 'default_cap',
           'analyse_poset', 'report_record', 'write_reports', 'summarize',
           'diagram_document', 'write_document']

logger = logging.getLogger(__name__)

DEFAULT_INFINITE_CAP = 7
FIBER_COLOURS = ('lightblue', 'lightpink', 'palegreen', 'khaki', 'plum',
                 'lightsalmon', 'lightcyan', 'wheat', 'thistle', 'lightgrey')

RunConfig = collections.namedtuple(
    "RunConfig", "system gamma cap out form words lower upper fibers jobs")

DiagramDocument = collections.namedtuple("DiagramDocument", "source nodes edges classes")


class Error(Exception):
    """Parent class for report exceptions"""
    pass


class ExportError(Error):
    """Raised when a report or diagram cannot be written.

    Attributes:
        path, reason

    """
    def __init__(self, path, reason):
        self.path = path
        self.reason = reason

    def __str__(self):
        return "Cannot write {}: {}".format(self.path, self.reason)


def default_cap(system):
    '''The length of w_o for a finite group, a fixed truncation otherwise.'''
    if is_finite(system):
        return longest_element(system).length
    return DEFAULT_INFINITE_CAP


def make_config(system='A3', gamma=None, cap=None, out=None, form='report',
                words=(), lower=None, upper=None, fibers=False, jobs=1):
    '''Load the system and check the options against it.'''
    system = load_system(system)
    gamma = parse_gamma(system, gamma)
    if cap is None:
        cap = default_cap(system)
    if cap < 0:
        raise BadCapError(cap)
    return RunConfig(system, gamma, cap, out, form, tuple(words), lower, upper, fibers, max(1, jobs))


def analyse_poset(poset, pairs=None, jobs=1):
    '''IntervalReports for the given (u, v) pairs, all comparable pairs by default.

    The work may be spread over a thread pool; results come back in the
    order of the pairs.
    '''
    if pairs is None:
        pairs = list(poset.comparable_pairs())

    def analyse(pair):
        return analyse_interval(ClosedInterval(poset, pair[0], pair[1]))

    if jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(analyse, pairs))
    else:
        reports = [analyse(pair) for pair in pairs]
    logger.info('Analysed {} intervals'.format(len(reports)))
    return reports


def report_record(report):
    return json.dumps(report._asdict(), sort_keys=True, ensure_ascii=False)


def write_reports(reports, stream):
    for report in reports:
        stream.write(report_record(report))
        stream.write('\n')


def summarize(poset, reports, tree=None):
    '''Counts for a whole run, as a plain dict.'''
    passed = sum(1 for r in reports if r.el_passed)
    histogram = collections.Counter(r.mobius_recursive for r in reports)
    homotopy = collections.Counter(
        'contractible' if r.homotopy == 'contractible' else 'spherical'
        for r in reports if r.homotopy is not None)
    summary = collections.OrderedDict([
        ('system', poset.gamma.system.name),
        ('gamma', str(poset.gamma)),
        ('cap', poset.cap),
        ('elements', len(poset)),
        ('covers', poset.hasse.number_of_edges()),
        ('intervals', len(reports)),
        ('el_passed', passed),
        ('el_pass_rate', passed / len(reports) if reports else 1.0),
        ('mobius_histogram', {str(k): histogram[k] for k in sorted(histogram)}),
        ('spherical', homotopy['spherical']),
        ('contractible', homotopy['contractible']),
        ('nuclear', sum(1 for r in reports if r.nuclear)),
        ('intervals_with_problems', sum(1 for r in reports if r.problems)),
    ])
    if tree is not None:
        summary['spanning_tree_verified'] = tree.verified
    return summary


def _node_label(w, gamma):
    return str(sorting_word(w, gamma)) or 'e'


def _add_ranks(dot, nodes, fill):
    for length, group in itertools.groupby(nodes, key=lambda node: node[2].length):
        with dot.subgraph(name='rank{}'.format(length)) as rank:
            rank.attr(rank='same')
            for name, label, w in group:
                if w in fill:
                    rank.node(name, label, style='filled', fillcolor=fill[w])
                else:
                    rank.node(name, label)


def diagram_document(poset, fibers=False):
    '''A DOT description of the Hasse diagram, one rank per length.

    Edges carry their labels.  With ``fibers`` the whole (finite) group is
    drawn instead, under the weak order, with each congruence class that
    has more than one element filled in its own colour.
    '''
    gamma = poset.gamma
    dot = graphviz.Digraph(name='cambrian', comment='Cambrian poset for {}'.format(gamma),
                           graph_attr={'rankdir': 'BT'}, node_attr={'shape': 'box'})
    classes = []
    if fibers:
        system = gamma.system
        elements = enumerate_elements(system)
        classes = [list(members) for members in congruence_fibers(gamma).values()]
        covers = [(w, z) for w in elements
                  for z in (system.element(w.word + (s,)) for s in range(system.rank)
                            if s not in right_descents(w))]
    else:
        elements = list(poset.elements)
        covers = poset.hasse_edges()

    ids = {w: 'n{}'.format(k) for k, w in enumerate(elements)}
    nodes = [(ids[w], _node_label(w, gamma), w) for w in sorted(elements, key=element_key)]
    fill = {}
    for colour, members in enumerate(m for m in classes if len(m) > 1):
        for w in members:
            fill[w] = FIBER_COLOURS[colour % len(FIBER_COLOURS)]
    _add_ranks(dot, nodes, fill)

    edges = []
    for u, v in covers:
        label = label_edge(u, v, gamma) if not fibers else None
        edges.append((ids[u], ids[v], label))
        if label is None:
            dot.edge(ids[u], ids[v])
        else:
            dot.edge(ids[u], ids[v], label=str(label))
    logger.debug('Diagram with {} nodes and {} edges'.format(len(nodes), len(edges)))
    return DiagramDocument(dot.source, [(name, label) for name, label, _ in nodes], edges, classes)


def write_document(text, path):
    try:
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
    except (IOError, OSError) as e:
        raise ExportError(path, e.strerror or str(e))
