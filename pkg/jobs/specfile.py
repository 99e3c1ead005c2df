"""SpecFile: a ring, named ideals, modules and jobs read from a spec file.

The first ``ideal`` statement defines R = S/I. Later ideal statements
name ideals of R; inside an ideal list a bare ideal name (or ``m`` for the
maximal ideal), optionally raised to a power, stands for its generators.
"""
import collections
import hashlib

from pyparsing import ParseBaseException
from pyparsing import col
from pyparsing import lineno

from base.exceptions import NotPrime
from base.exceptions import SpecParseError
from core_algebra.polynomials import PolyRing
from groebner.ideals import HomogeneousIdeal
from jobs.grammar import ARGUMENTS
from jobs.grammar import POLYNOMIAL
from jobs.grammar import Quoted
from jobs.grammar import Range
from jobs.grammar import SPEC
from resolutions.modules import GradedFreeModule
from resolutions.modules import GradedMatrix
from resolutions.presentations import ModulePresentation
from resolutions.rings import QuotientRing
from tor_sigma.local import local_cohomology_h0


MAXIMAL = 'm'


class IdealItem(object):
    """One entry of an ideal list: a polynomial, or a reference to a named
    ideal raised to ``power``."""

    def __init__(self, polynomial=None, reference=None, power=1):
        self.polynomial = polynomial
        self.reference = reference
        self.power = power

    def __str__(self):
        if self.reference is None:
            return str(self.polynomial)
        if self.power == 1:
            return self.reference
        return '%s^%d' % (self.reference, self.power)


class ModuleSpec(object):
    def __init__(self, form, items=None, rows=None, twists=None):
        self.form = form
        self.items = items or []
        self.rows = rows or []
        self.twists = twists or []

    def __str__(self):
        if self.form == 'h0':
            return 'h0'
        if self.form == 'coker':
            text = 'coker [%s]' % ', '.join(
                '[%s]' % ', '.join(str(f) for f in row) for row in self.rows)
            if any(self.twists):
                text += ' twists %s' % ', '.join(str(t) for t in self.twists)
            return text
        return '%s %s' % (self.form, ', '.join(str(i) for i in self.items))


class JobSpec(object):
    def __init__(self, op, positional=(), options=None):
        self.op = op
        self.positional = list(positional)
        self.options = collections.OrderedDict(options or ())

    def option(self, key, default=None):
        return self.options.get(key, default)

    def to_data(self):
        return {'op': self.op,
                'positional': [str(v) for v in self.positional],
                'options': dict((k, str(v))
                                for k, v in self.options.items())}

    def __str__(self):
        pieces = [self.op]
        pieces.extend(_format_value(v) for v in self.positional)
        pieces.extend('%s=%s' % (k, _format_value(v))
                      for k, v in self.options.items())
        return ' '.join(pieces)


def _format_value(value):
    if isinstance(value, Quoted):
        return '"%s"' % value
    return str(value)


class SpecFile(object):
    def __init__(self, ambient, ring_ideal=None):
        self.ambient = ambient
        self.ring_ideal = ring_ideal
        self.ideals = collections.OrderedDict()
        self.modules = collections.OrderedDict()
        self.jobs = collections.OrderedDict()
        self._ring = None

    @property
    def p(self):
        return self.ambient.characteristic

    @property
    def variables(self):
        return list(self.ambient.variables)

    @property
    def ring(self):
        if self._ring is None:
            gens = []
            if self.ring_ideal is not None:
                gens = self.generators(self.ideals[self.ring_ideal])
            self._ring = QuotientRing(self.ambient, gens)
        return self._ring

    # Evaluation ----------------------------------------------------------
    def generators(self, items):
        gens = []
        for item in items:
            if item.reference is None:
                gens.append(item.polynomial)
                continue
            if item.reference == MAXIMAL:
                base = HomogeneousIdeal(self.ambient, self.ambient.gens())
            else:
                base = HomogeneousIdeal(
                    self.ambient, self.generators(self.ideals[item.reference]))
            gens.extend((base ** item.power).generators)
        return gens

    def ideal(self, name):
        if name == MAXIMAL and name not in self.ideals:
            return self.ring.maximal_ideal
        if name not in self.ideals:
            raise SpecParseError('ideal %s is not defined' % name)
        return HomogeneousIdeal(self.ambient,
                                self.generators(self.ideals[name]))

    def module(self, name):
        if name not in self.modules:
            raise SpecParseError('module %s is not defined' % name)
        spec = self.modules[name]
        ring = self.ring
        if spec.form == 'h0':
            return local_cohomology_h0(ring)
        if spec.form == 'quotient':
            return ModulePresentation.from_ideal(ring,
                                                 self.generators(spec.items))
        if spec.form == 'ideal':
            return ModulePresentation.ideal_module(
                ring, self.generators(spec.items))
        target = GradedFreeModule(ring, spec.twists)
        source = GradedFreeModule(ring, _source_twists(spec.rows,
                                                       spec.twists))
        return ModulePresentation(ring, GradedMatrix(source, target,
                                                     spec.rows))

    def element(self, text):
        """A polynomial given as a job argument."""
        try:
            node = POLYNOMIAL.parseString(str(text), parseAll=True)[0]
        except ParseBaseException as e:
            raise SpecParseError('bad polynomial %r: %s' % (text, e.msg))
        return _Evaluator(self.ambient, str(text)).polynomial(node)

    # Printing ------------------------------------------------------------
    def canonical_text(self):
        lines = ['p = %d;' % self.p,
                 'vars = %s;' % ', '.join(self.variables)]
        if self.ambient.order != 'grevlex':
            lines.append('order = %s;' % self.ambient.order)
        for name, items in self.ideals.items():
            lines.append('ideal %s = %s;' % (
                name, ', '.join(str(item) for item in items)))
        for name, spec in self.modules.items():
            lines.append('module %s = %s;' % (name, spec))
        for name, job in self.jobs.items():
            lines.append('job %s = %s;' % (name, job))
        return '\n'.join(lines) + '\n'

    def digest(self):
        return hashlib.sha256(
            self.canonical_text().encode('utf-8')).hexdigest()

    def seed(self):
        return int(self.digest()[:8], 16)

    def __eq__(self, other):
        return (isinstance(other, SpecFile) and
                self.canonical_text() == other.canonical_text())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.canonical_text())

    def __str__(self):
        return self.canonical_text()


def _source_twists(rows, target_twists):
    twists = []
    for column in range(len(rows[0]) if rows else 0):
        degrees = set(rows[r][column].homogeneous_degree + target_twists[r]
                      for r in range(len(rows)) if rows[r][column])
        if len(degrees) > 1:
            raise SpecParseError('column %d of the matrix is not homogeneous'
                                 % (column + 1))
        twists.append(degrees.pop() if degrees else min(target_twists))
    return twists


class _Evaluator(object):
    """Turns grammar nodes into Polynomials of one ambient ring, reporting
    positions in ``text``."""

    def __init__(self, ambient, text):
        self.ambient = ambient
        self.text = text

    def error(self, message, loc, **details):
        return SpecParseError(message, lineno(loc, self.text),
                              col(loc, self.text), **details)

    def evaluate(self, node):
        kind = node.kind
        if kind == 'num':
            return self.ambient.constant(node.value)
        if kind == 'name':
            if node.value not in self.ambient.variables:
                raise self.error('unknown variable %s' % node.value,
                                 node.loc, name=node.value)
            return self.ambient.gen(node.value)
        if kind == 'pow':
            return self.evaluate(node.children[0]) ** node.value
        if kind == 'mul':
            result = self.ambient.one()
            for child in node.children:
                result = result * self.evaluate(child)
            return result
        if kind == 'term':
            value = self.evaluate(node.children[0])
            return value if node.value == 1 else -value
        result = self.ambient.zero()
        for child in node.children:
            result = result + self.evaluate(child)
        return result

    def polynomial(self, node):
        """Evaluate and insist on homogeneity, naming a term of the lowest
        degree when it fails."""
        f = self.evaluate(node)
        if not f.is_homogeneous():
            components = f.homogeneous_components()
            top = max(components)
            low = min(components)
            term = str(components[low]).split(' + ')[0]
            raise self.error('non-homogeneous polynomial %s: term %s has '
                             'degree %d, not %d' % (f, term, low, top),
                             node.loc, term=term)
        return f


def _reference(node, names):
    """(name, power) when ``node`` is a bare ideal name or a power of one."""
    power = 1
    if node.kind == 'pow':
        power = node.value
        node = node.children[0]
    if node.kind == 'name' and node.value in names:
        return node.value, power
    return None


def parse_spec(text):
    """Parse spec-file text into a SpecFile."""
    try:
        statements = SPEC.parseString(text, parseAll=True)
    except ParseBaseException as e:
        raise SpecParseError('syntax error: %s' % e.msg, e.lineno, e.col)

    def where(loc):
        return lineno(loc, text), col(loc, text)

    header = {}
    spec = None
    evaluator = None
    for located in statements:
        statement = located.value
        kind = statement['kind']
        if kind in ('p', 'vars', 'order'):
            if spec is not None:
                raise SpecParseError('%s must precede ideals, modules and jobs'
                                     % kind, *where(located.loc))
            if kind in header:
                raise SpecParseError('%s is given twice' % kind,
                                     *where(located.loc))
            header[kind] = statement['value']
            continue
        if spec is None:
            spec, evaluator = _start(header, text, located.loc)
        name = statement['name']
        if kind == 'ideal':
            _unique(name, spec.ideals, text, located.loc)
            spec.ideals[name] = _ideal_items(statement['value'], spec,
                                             evaluator)
            if spec.ring_ideal is None:
                spec.ring_ideal = name
        elif kind == 'module':
            _unique(name, spec.modules, text, located.loc)
            spec.modules[name] = _module_spec(statement, spec, evaluator)
        else:
            _unique(name, spec.jobs, text, located.loc)
            spec.jobs[name] = _job_spec(statement)
    if spec is None:
        spec, evaluator = _start(header, text, len(text))
    return spec


def _start(header, text, loc):
    if 'p' not in header or 'vars' not in header:
        raise SpecParseError('p and vars must be declared first',
                             lineno(loc, text), col(loc, text))
    p = header['p']
    names = [v.value for v in header['vars']]
    try:
        ambient = PolyRing(p.value, names, header.get('order', 'grevlex'))
    except NotPrime as e:
        raise SpecParseError(e.message, lineno(p.loc, text), col(p.loc, text),
                             p=p.value)
    except ValueError as e:
        loc = header['vars'][0].loc
        raise SpecParseError(str(e), lineno(loc, text), col(loc, text))
    return SpecFile(ambient), _Evaluator(ambient, text)


def _unique(name, table, text, loc):
    if name in table:
        raise SpecParseError('%s is defined twice' % name, lineno(loc, text),
                             col(loc, text))


def _ideal_items(nodes, spec, evaluator):
    names = set(spec.ideals) - set(spec.variables)
    if MAXIMAL not in spec.variables:
        names.add(MAXIMAL)
    items = []
    for node in nodes:
        reference = _reference(node, names)
        if reference is not None:
            items.append(IdealItem(reference=reference[0],
                                   power=reference[1]))
        else:
            items.append(IdealItem(evaluator.polynomial(node)))
    return items


def _module_spec(statement, spec, evaluator):
    form = statement['form']
    if form == 'h0':
        return ModuleSpec('h0')
    if form in ('quotient', 'ideal'):
        return ModuleSpec(form, items=_ideal_items(statement['matrix'], spec,
                                                   evaluator))
    rows = [[evaluator.polynomial(node) for node in row]
            for row in statement['matrix']]
    if len(set(len(row) for row in rows)) != 1:
        raise evaluator.error('matrix rows have different lengths',
                              statement['matrix'][0][0].loc)
    if 'twists' in statement:
        twists = [int(t) for t in statement['twists']]
    else:
        twists = [0] * len(rows)
    if len(twists) != len(rows):
        raise evaluator.error('%d twists for %d rows' % (len(twists),
                                                         len(rows)),
                              statement['matrix'][0][0].loc)
    _source_twists(rows, twists)
    return ModuleSpec('coker', rows=rows, twists=twists)


def _job_spec(statement):
    return _job_from_arguments(statement['op'], statement['args'])


def _job_from_arguments(op, arguments):
    positional = []
    options = collections.OrderedDict()
    for argument in arguments:
        if isinstance(argument, (str, Range)):
            positional.append(argument)
        else:
            options[argument[0]] = argument[1]
    return JobSpec(op, positional, options)


def parse_job(op, text):
    """A JobSpec from an operation name and argument text, as given on the
    command line."""
    try:
        arguments = ARGUMENTS.parseString(text, parseAll=True)[0]
    except ParseBaseException as e:
        raise SpecParseError('bad job arguments %r: %s' % (text, e.msg),
                             e.lineno, e.col)
    return _job_from_arguments(op, arguments)
