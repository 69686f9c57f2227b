# coding: utf-8
"""Command line surface for the Cambrian semilattice tools.

Each sub-command is a ``cmd_*`` function taking a RunConfig and giving
back a CommandResult; ``main`` parses the arguments, sets up logging and
turns library errors into exit status 2.  A status of 1 means that some
property the run checks did not hold.
"""
import argparse
import collections
import io
import json
import logging
import sys

from cambrian import coxeter, field, notation, report, semilattice, shelling, sortable
from cambrian.notation import format_positions, format_sorting_word, format_word, parse_word
from cambrian.report import (analyse_poset, diagram_document, make_config, summarize,
                             write_document, write_reports)
from cambrian.semilattice import build_cambrian, interval
from cambrian.shelling import (analyse_interval, el_check, homotopy_type, invariance_check,
                               maximal_chains, mobius_chains, mobius_order_complex,
                               mobius_recursive, spanning_tree)
from cambrian.sortable import (congruence_fibers, enumerate_sortables, is_sortable_blocks,
                               is_sortable_recursive, pi_down, position_closure_check,
                               reduced_words_of_coxeter_element, sorting_word)

logger = logging.getLogger(__name__)

CommandResult = collections.namedtuple("CommandResult", "text status")

LIBRARY_ERRORS = (coxeter.Error, field.Error, sortable.Error, semilattice.Error,
                  shelling.Error, notation.Error, report.Error)


def _yes_no(flag):
    return 'true' if flag else 'false'


def _words(config):
    return [parse_word(config.system, text) for text in config.words]


def _closed(config):
    '''The interval named by --lower and --upper in the poset of config.'''
    poset = build_cambrian(config.gamma, config.cap)
    lower = poset.bottom if config.lower is None else parse_word(config.system, config.lower)
    upper = poset.elements[-1] if config.upper is None else parse_word(config.system, config.upper)
    return interval(poset, lower, upper)


def cmd_sortword(config):
    '''Sorting word, alpha positions and sortability of each word.'''
    lines = []
    for w in _words(config):
        sw = sorting_word(w, config.gamma)
        lines.append(format_sorting_word(sw))
        lines.append('alpha: {}'.format(format_positions(sw.positions)))
        lines.append('sortable: {}'.format(_yes_no(is_sortable_blocks(w, config.gamma))))
    return CommandResult('\n'.join(lines), 0)


def cmd_sortable(config):
    '''With words, test each one three ways; without, list the sortable elements up to the cap.'''
    gamma = config.gamma
    if not config.words:
        lines = ['{}\t{}'.format(format_word(w), format_sorting_word(sorting_word(w, gamma)) or 'e')
                 for w in enumerate_sortables(gamma, config.cap)]
        return CommandResult('\n'.join(lines), 0)

    lines = []
    status = 0
    for w in _words(config):
        verdicts = (is_sortable_blocks(w, gamma), is_sortable_recursive(w, gamma),
                    position_closure_check(w, gamma))
        if len(set(verdicts)) > 1:
            logger.warning('Sortability tests disagree on {}: {}'.format(w, verdicts))
            status = 1
        lines.append('{}: {}'.format(format_word(w), _yes_no(verdicts[0])))
    return CommandResult('\n'.join(lines), status)


def cmd_project(config):
    lines = ['{} -> {}'.format(format_word(w), format_word(pi_down(w, config.gamma)))
             for w in _words(config)]
    return CommandResult('\n'.join(lines), 0)


def cmd_build(config):
    '''Build the poset, analyse every interval and write the reports and a summary.

    With ``--format diagram`` the labelled Hasse diagram is written instead.
    '''
    if config.form == 'diagram':
        return cmd_export(config)

    poset = build_cambrian(config.gamma, config.cap)
    reports = analyse_poset(poset, jobs=config.jobs)
    tree = spanning_tree(poset)
    summary = summarize(poset, reports, tree)
    status = 0 if (summary['el_passed'] == summary['intervals']
                   and not summary['intervals_with_problems'] and tree.verified) else 1
    for element, reason in tree.failures:
        logger.warning('Spanning tree: {} {}'.format(element, reason))

    stream = io.StringIO()
    write_reports(reports, stream)
    summary_text = json.dumps(summary, ensure_ascii=False, indent=2)
    if config.out is None:
        return CommandResult(stream.getvalue() + summary_text, status)
    write_document(stream.getvalue(), config.out)
    write_document(summary_text + '\n', config.out + '.summary.json')
    return CommandResult(summary_text, status)


def cmd_interval(config):
    result = analyse_interval(_closed(config))
    return CommandResult(report.report_record(result), 1 if result.problems else 0)


def cmd_elcheck(config):
    closed = _closed(config)
    chains = maximal_chains(closed)
    verdict = el_check(closed, chains=chains)
    lines = ['{}: {}'.format(' '.join(str(label) for label in chain.labels), chain.kind)
             for chain in chains]
    lines.append('EL: passed' if verdict.passed else 'EL: failed ({})'.format(verdict.reason))
    return CommandResult('\n'.join(lines), 0 if verdict.passed else 1)


def cmd_mobius(config):
    '''The three Moebius values of one interval; they must agree.'''
    closed = _closed(config)
    values = [mobius_recursive(closed), mobius_order_complex(closed)]
    verdict = el_check(closed)
    if verdict.passed:
        values.append(mobius_chains(closed, verdict))
    lines = ['recursive: {}'.format(values[0]), 'order complex: {}'.format(values[1])]
    if verdict.passed:
        lines.append('falling chains: {}'.format(values[2]))
    return CommandResult('\n'.join(lines), 0 if verdict.passed and len(set(values)) == 1 else 1)


def cmd_homotopy(config):
    return CommandResult(str(homotopy_type(_closed(config))), 0)


def cmd_fibers(config):
    lines = []
    for x, members in congruence_fibers(config.gamma).items():
        lines.append('{}: {}'.format(format_word(x), ' '.join(format_word(w) for w in members)))
    return CommandResult('\n'.join(lines), 0)


def cmd_invariance(config):
    '''Compare chain censuses across all reduced words of gamma.'''
    words = reduced_words_of_coxeter_element(config.gamma)
    result = invariance_check(words, config.cap)
    lines = ['words: {}'.format(' '.join(result.words)),
             'intervals: {}'.format(result.intervals)]
    for mismatch in result.mismatches:
        lines.append('mismatch: {} {}'.format(*mismatch))
    lines.append('consistent: {}'.format(_yes_no(result.consistent)))
    return CommandResult('\n'.join(lines), 0 if result.consistent else 1)


def cmd_export(config):
    poset = build_cambrian(config.gamma, config.cap)
    document = diagram_document(poset, fibers=config.fibers)
    if config.out is None:
        return CommandResult(document.source, 0)
    write_document(document.source, config.out)
    return CommandResult('Wrote {} nodes and {} edges to {}'.format(
        len(document.nodes), len(document.edges), config.out), 0)


COMMANDS = collections.OrderedDict([
    ('sortword', (cmd_sortword, 'Show the gamma-sorting word of each word')),
    ('sortable', (cmd_sortable, 'Test words for sortability, or list the sortable elements')),
    ('project', (cmd_project, 'Project each word down to its sortable element')),
    ('build', (cmd_build, 'Build the Cambrian poset and report on every interval')),
    ('interval', (cmd_interval, 'Report on one interval')),
    ('elcheck', (cmd_elcheck, 'List the maximal chains of an interval and check the labelling')),
    ('mobius', (cmd_mobius, 'Moebius function of an interval, three ways')),
    ('homotopy', (cmd_homotopy, 'Homotopy type of an interval')),
    ('fibers', (cmd_fibers, 'Congruence classes of a finite group')),
    ('invariance', (cmd_invariance, 'Compare the reduced words of gamma')),
    ('export', (cmd_export, 'Write the Hasse diagram as DOT text')),
])


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", default='A3',
                        help="A bundled system ({}) or a system file".format(
                            ', '.join(sorted(notation.BUNDLED_SYSTEMS))))
    common.add_argument("--gamma", help="Coxeter element as comma-separated generator names")
    common.add_argument("--cap", type=int, help="Length cap, default the length of w_o (or 7)")
    common.add_argument("--out", help="Write output here rather than to stdout")
    common.add_argument("--format", dest='form', choices=('report', 'diagram'), default='report')
    common.add_argument("--lower", help="Bottom of the interval, default the identity")
    common.add_argument("--upper", help="Top of the interval, default the last element built")
    common.add_argument("--fibers", action='store_true', help="Highlight congruence classes")
    common.add_argument("--jobs", type=int, default=1, help="Threads for interval analysis")
    common.add_argument("--verbose", action='store_true', help="Log debugging messages")

    parser = argparse.ArgumentParser(prog='cambrian', description="Cambrian semilattices of Coxeter groups.")
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    for name, (func, text) in COMMANDS.items():
        sub = commands.add_parser(name, parents=[common], help=text, description=text)
        if name in ('sortword', 'sortable', 'project'):
            sub.add_argument("words", nargs='*', help="Words as comma-separated generator names")
        sub.set_defaults(func=func)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        config = make_config(args.system, args.gamma, args.cap, args.out, args.form,
                             getattr(args, 'words', ()), args.lower, args.upper,
                             args.fibers, args.jobs)
        result = args.func(config)
    except LIBRARY_ERRORS as e:
        print('cambrian: {}'.format(e), file=sys.stderr)
        return 2
    if result.text:
        print(result.text)
    return result.status
