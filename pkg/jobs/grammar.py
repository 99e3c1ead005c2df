"""pyparsing grammar for spec files.

    spec      :: statement [';' statement]* [';']
    statement :: 'p' '=' int | 'vars' '=' ident,... | 'order' '=' ordername
               | 'ideal' ident '=' poly,...
               | 'module' ident '=' ('coker' matrix ['twists' int,...]
                                     | 'quotient' poly,... | 'ideal' poly,...
                                     | 'h0')
               | 'job' ident '=' opname arg*
    arg       :: ident '=' value | value
    value     :: int '..' int | int | '"' text '"' | word
    poly      :: ['-'] term [('+' | '-') term]*
    term      :: factor ['*' factor]*
    factor    :: atom ['^' int]
    atom      :: int | ident | '(' poly ')'

Comments run from '#' to the end of the line. Parse actions build plain
AST nodes carrying their source offset; evaluation happens in specfile.
"""
from pyparsing import Group
from pyparsing import Forward
from pyparsing import Keyword
from pyparsing import Literal
from pyparsing import Optional
from pyparsing import QuotedString
from pyparsing import StringEnd
from pyparsing import Suppress
from pyparsing import Word
from pyparsing import ZeroOrMore
from pyparsing import alphanums
from pyparsing import alphas
from pyparsing import delimitedList
from pyparsing import nums
from pyparsing import pythonStyleComment


class Node(object):
    """A polynomial expression node: kind is num, name, pow, mul, term
    (a signed summand) or add."""
    __slots__ = ('kind', 'value', 'children', 'loc')

    def __init__(self, kind, value=None, children=(), loc=0):
        self.kind = kind
        self.value = value
        self.children = list(children)
        self.loc = loc

    def __repr__(self):
        return '<Node %s %r %r>' % (self.kind, self.value, self.children)


class Range(object):
    __slots__ = ('low', 'high')

    def __init__(self, low, high):
        self.low = low
        self.high = high

    def __eq__(self, other):
        return (isinstance(other, Range) and
                (self.low, self.high) == (other.low, other.high))

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return '%d..%d' % (self.low, self.high)


class Located(object):
    __slots__ = ('loc', 'value')

    def __init__(self, loc, value):
        self.loc = loc
        self.value = value


class Quoted(str):
    """A double-quoted job argument, kept apart from bare words."""


def _num(s, loc, toks):
    return Node('num', int(toks[0]), loc=loc)


def _name(s, loc, toks):
    return Node('name', toks[0], loc=loc)


def _factor(s, loc, toks):
    if len(toks) == 1:
        return toks[0]
    return Node('pow', int(toks[2]), [toks[0]], loc=loc)


def _term(s, loc, toks):
    factors = [t for t in toks if isinstance(t, Node)]
    if len(factors) == 1:
        return factors[0]
    return Node('mul', children=factors, loc=loc)


def _poly(s, loc, toks):
    signed = []
    sign = 1
    for token in toks:
        if token == '-':
            sign = -sign
        elif token == '+':
            continue
        else:
            signed.append(Node('term', sign, [token], loc=token.loc))
            sign = 1
    if len(signed) == 1 and signed[0].value == 1:
        return signed[0].children[0]
    return Node('add', children=signed, loc=loc)


def _located(s, loc, toks):
    return Located(loc, toks[0])


def build_grammar():
    integer = Word(nums)
    signed_integer = Word('-' + nums, nums)
    ident = Word(alphas, alphanums + '_')

    poly = Forward()
    atom = (integer.copy().setParseAction(_num) |
            ident.copy().setParseAction(_name) |
            Suppress('(') + poly + Suppress(')'))
    factor = (atom + Optional(Literal('^') + integer)).setParseAction(_factor)
    term = (factor + ZeroOrMore(Literal('*') + factor)).setParseAction(_term)
    poly <<= (Optional(Literal('-')) + term +
              ZeroOrMore((Literal('+') | Literal('-')) + term)
              ).setParseAction(_poly)
    poly_list = Group(delimitedList(poly))

    located_int = integer.copy().setParseAction(
        lambda s, loc, toks: Located(loc, int(toks[0])))
    p_stmt = Keyword('p')('kind') + Suppress('=') + located_int('value')
    vars_stmt = (Keyword('vars')('kind') + Suppress('=') +
                 Group(delimitedList(ident.copy().setParseAction(_located)))(
                     'value'))
    order_stmt = (Keyword('order')('kind') + Suppress('=') +
                  (Keyword('grevlex') | Keyword('lex'))('value'))
    ideal_stmt = (Keyword('ideal')('kind') + ident('name') + Suppress('=') +
                  poly_list('value'))

    row = Group(Suppress('[') + delimitedList(poly) + Suppress(']'))
    matrix = Group(Suppress('[') + delimitedList(row) + Suppress(']'))
    coker = (Keyword('coker')('form') + matrix('matrix') +
             Optional(Suppress(Keyword('twists')) +
                      Group(delimitedList(signed_integer))('twists')))
    quotient = Keyword('quotient')('form') + poly_list('matrix')
    ideal_module = Keyword('ideal')('form') + poly_list('matrix')
    h0 = Keyword('h0')('form')
    module_stmt = (Keyword('module')('kind') + ident('name') + Suppress('=') +
                   (coker | quotient | ideal_module | h0))

    word = Word(alphanums + '_-')
    value = (Group(integer + Suppress('..') + integer).setParseAction(
                 lambda toks: Range(int(toks[0][0]), int(toks[0][1]))) |
             QuotedString('"').setParseAction(lambda toks: Quoted(toks[0])) |
             word)
    argument = Group(ident + Suppress('=') + value) | value
    arguments = Group(ZeroOrMore(argument))
    job_stmt = (Keyword('job')('kind') + ident('name') + Suppress('=') +
                word('op') + arguments('args'))

    statement = Group(p_stmt | vars_stmt | order_stmt | ideal_stmt |
                      module_stmt | job_stmt).setParseAction(
                          _located)
    spec = (Optional(statement + ZeroOrMore(Suppress(';') + statement)) +
            Optional(Suppress(';')) + StringEnd())
    spec.ignore(pythonStyleComment)
    return spec, poly + StringEnd(), arguments + StringEnd()


SPEC, POLYNOMIAL, ARGUMENTS = build_grammar()
