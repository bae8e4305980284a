"""Textual language, abstract syntax, grounding and normalisation.

The surface language (UTF-8, `%` starts a line comment, statements end in `.`):

    rule       := [head] [":-" body] "."
    head       := atom { ("|" | "v") atom }        # omitted head = constraint
    body       := literal { "," literal }
    literal    := ["not"] ("K" | "M") objlit | objlit
    objlit     := ["not" ["not"]] (atom | "#true" | "#false" | "⊤" | "⊥")
    atom       := ["-"] name [ "(" term { "," term } ")" ]

Capitalised terms are variables, everything else is a constant.  `not`, `K`,
`M` and `v` are reserved words.  Facts omit `:-`; a leading `-` is strong
negation, compiled to a paired atom plus an implicit mutual-exclusion
constraint at normalisation time.

Atoms are ordered lexicographically by their printed form; every set-valued
output downstream is canonicalised with that order.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Union

from .errors import GroundingError, ParseError


class TruthConst(enum.Enum):
    TRUE = "⊤"
    FALSE = "⊥"

    def __str__(self) -> str:
        return self.value


TOP = TruthConst.TRUE
BOT = TruthConst.FALSE


def is_variable(term: str) -> bool:
    return term[:1].isupper()


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple[str, ...] = ()
    strong_neg: bool = False

    def __str__(self) -> str:
        sign = "-" if self.strong_neg else ""
        if self.args:
            return f"{sign}{self.name}({','.join(self.args)})"
        return f"{sign}{self.name}"

    def __lt__(self, other: "Atom") -> bool:
        return str(self) < str(other)

    @property
    def is_ground(self) -> bool:
        return not any(is_variable(t) for t in self.args)

    def positive(self) -> "Atom":
        return Atom(self.name, self.args, False)

    def negated(self) -> "Atom":
        return Atom(self.name, self.args, not self.strong_neg)

    def substitute(self, binding: dict[str, str]) -> "Atom":
        return Atom(self.name, tuple(binding.get(t, t) for t in self.args), self.strong_neg)


@dataclass(frozen=True)
class ObjLit:
    """Objective literal: a truth constant or atom under 0..2 default negations."""

    base: Union[Atom, TruthConst]
    negs: int = 0

    def __post_init__(self):
        if not 0 <= self.negs <= 2:
            raise ValueError(f"negation depth {self.negs} out of range 0..2")

    def __str__(self) -> str:
        return "not " * self.negs + str(self.base)

    @property
    def atom(self) -> Atom | None:
        return self.base if isinstance(self.base, Atom) else None


# one-step default negation; triple negation collapses to single
_NEGATE = {0: 1, 1: 2, 2: 1}


def default_negate(lit: ObjLit) -> ObjLit:
    return ObjLit(lit.base, _NEGATE[lit.negs])


@dataclass(frozen=True)
class SubjLit:
    """Subjective literal: K l, M l, not K l or not M l."""

    modality: str  # "K" or "M"
    inner: ObjLit
    neg: bool = False  # leading default negation

    def __post_init__(self):
        if self.modality not in ("K", "M"):
            raise ValueError(f"unknown modality {self.modality!r}")
        if self.inner.atom is None:
            raise ValueError("modality applied to a truth constant")

    def __str__(self) -> str:
        prefix = "not " if self.neg else ""
        return f"{prefix}{self.modality} {self.inner}"

    @property
    def atom(self) -> Atom:
        return self.inner.base

    def core(self) -> "SubjLit":
        """The literal stripped of its outer default negation."""
        return SubjLit(self.modality, self.inner, False) if self.neg else self


Literal = Union[ObjLit, SubjLit]


@dataclass(frozen=True)
class Rule:
    head: frozenset[Atom]
    body: tuple[Literal, ...]
    pos: tuple[int, int] | None = field(default=None, compare=False, repr=False)

    def __str__(self) -> str:
        head_s = " | ".join(str(a) for a in sorted(self.head, key=atom_key))
        body_s = ", ".join(str(l) for l in self.body)
        if not self.head:
            return f":- {body_s}." if self.body else ":- ⊤."
        if not self.body:
            return f"{head_s}."
        return f"{head_s} :- {body_s}."

    @property
    def body_obj(self) -> tuple[ObjLit, ...]:
        return tuple(l for l in self.body if isinstance(l, ObjLit))

    @property
    def body_sub(self) -> tuple[SubjLit, ...]:
        return tuple(l for l in self.body if isinstance(l, SubjLit))

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_fact(self) -> bool:
        return not self.body and bool(self.head)

    @property
    def is_subjective_constraint(self) -> bool:
        return not self.head and bool(self.body) and all(isinstance(l, SubjLit) for l in self.body)


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...]
    extra_atoms: frozenset[Atom] = frozenset()

    @classmethod
    def of(cls, rules: Iterable[Rule], extra_atoms: Iterable[Atom] = ()) -> "Program":
        deduped = tuple(dict.fromkeys(rules))
        return cls(deduped, frozenset(extra_atoms))

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    @property
    def atom_universe(self) -> frozenset[Atom]:
        return atoms_of(self) | self.extra_atoms


def atoms_of(construct) -> frozenset[Atom]:
    """All atoms occurring in a literal, head, rule, program or atom set."""
    if isinstance(construct, Atom):
        return frozenset([construct])
    if isinstance(construct, TruthConst):
        return frozenset()
    if isinstance(construct, ObjLit):
        return frozenset() if construct.atom is None else frozenset([construct.atom])
    if isinstance(construct, SubjLit):
        return frozenset([construct.atom])
    if isinstance(construct, Rule):
        out = set(construct.head)
        for lit in construct.body:
            out |= atoms_of(lit)
        return frozenset(out)
    if isinstance(construct, Program):
        out = set()
        for r in construct.rules:
            out |= atoms_of(r)
        return frozenset(out)
    # iterable of atoms / literals / rules
    out = set()
    for item in construct:
        out |= atoms_of(item)
    return frozenset(out)


def atom_key(a: Atom) -> str:
    return str(a)


def interp_key(interp: frozenset[Atom]) -> tuple[str, ...]:
    return tuple(sorted(str(a) for a in interp))


def is_objective(construct) -> bool:
    if isinstance(construct, ObjLit):
        return True
    if isinstance(construct, SubjLit):
        return False
    if isinstance(construct, Rule):
        return all(isinstance(l, ObjLit) for l in construct.body)
    if isinstance(construct, Program):
        return all(is_objective(r) for r in construct.rules)
    raise TypeError(f"unsupported construct {construct!r}")


# ---------------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>%[^\n]*)
      | (?P<arrow>:-)
      | (?P<dot>\.)
      | (?P<comma>,)
      | (?P<pipe>\|)
      | (?P<lpar>\()
      | (?P<rpar>\))
      | (?P<dash>-)
      | (?P<top>\#true|⊤)
      | (?P<bot>\#false|⊥)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*|[0-9]+)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"not": "not", "K": "mod", "M": "mod", "v": "pipe"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        tok_text = m.group()
        col = pos - line_start + 1
        if kind not in ("ws", "comment"):
            if kind == "name":
                kind = _KEYWORDS.get(tok_text, "name")
            elif kind == "pipe":
                pass
            tokens.append(_Token(kind, tok_text, line, col))
        newlines = tok_text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + tok_text.rfind("\n") + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text!r}", tok.line, tok.col)
        return self.next()

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    def program(self) -> Program:
        rules = []
        while self.peek().kind != "eof":
            rules.append(self.rule())
        return Program.of(rules)

    def rule(self) -> Rule:
        start = self.peek()
        head: list[Atom] = []
        body: tuple[Literal, ...] = ()
        if self.peek().kind != "arrow":
            head.append(self.atom())
            while self.peek().kind == "pipe":
                self.next()
                head.append(self.atom())
        if self.peek().kind == "arrow":
            self.next()
            body = self.body()
        elif not head:
            self.fail("expected a rule head or ':-'")
        self.expect("dot")
        return Rule(frozenset(head), body, pos=(start.line, start.col))

    def body(self) -> tuple[Literal, ...]:
        literals = [self.literal()]
        while self.peek().kind == "comma":
            self.next()
            literals.append(self.literal())
        return tuple(literals)

    def literal(self) -> Literal:
        negs = 0
        while self.peek().kind == "not":
            self.next()
            negs += 1
            if negs > 2:
                self.fail("default negation depth exceeds 2")
            if self.peek().kind == "mod":
                if negs > 1:
                    self.fail("modality under doubled default negation")
                return self.subjective(neg=True)
        if self.peek().kind == "mod":
            if negs:
                # unreachable: the loop above consumes the modality case
                self.fail("modality under default negation")
            return self.subjective(neg=False)
        return self.objective(negs)

    def subjective(self, neg: bool) -> SubjLit:
        mod = self.next().text
        inner_negs = 0
        while self.peek().kind == "not":
            self.next()
            inner_negs += 1
            if inner_negs > 2:
                self.fail("default negation depth exceeds 2")
        tok = self.peek()
        if tok.kind in ("top", "bot"):
            self.fail("modality applied to a truth constant")
        if tok.kind not in ("name", "dash"):
            self.fail(f"expected an atom after {mod!r}")
        return SubjLit(mod, ObjLit(self.atom(), inner_negs), neg)

    def objective(self, negs: int) -> ObjLit:
        tok = self.peek()
        if tok.kind == "top":
            self.next()
            return ObjLit(TOP, negs)
        if tok.kind == "bot":
            self.next()
            return ObjLit(BOT, negs)
        return ObjLit(self.atom(), negs)

    def atom(self) -> Atom:
        strong = False
        if self.peek().kind == "dash":
            self.next()
            strong = True
        tok = self.peek()
        if tok.kind != "name":
            self.fail("expected an atom name")
        if tok.text[0].isdigit() or tok.text[0].isupper():
            self.fail(f"atom name must start with a lowercase letter, found {tok.text!r}")
        self.next()
        args: tuple[str, ...] = ()
        if self.peek().kind == "lpar":
            self.next()
            terms = [self.term()]
            while self.peek().kind == "comma":
                self.next()
                terms.append(self.term())
            self.expect("rpar")
            args = tuple(terms)
        return Atom(tok.text, args, strong)

    def term(self) -> str:
        tok = self.peek()
        if tok.kind != "name":
            self.fail("expected a constant or variable")
        return self.next().text


def parse_program(text: str) -> Program:
    """Parse source text into an AST; no grounding or normalisation."""
    return _Parser(text).program()


def parse_rule(text: str) -> Rule:
    program = parse_program(text)
    if len(program.rules) != 1:
        raise ValueError(f"expected exactly one rule, got {len(program.rules)}")
    return program.rules[0]


def parse_atom(text: str) -> Atom:
    parser = _Parser(text)
    atom = parser.atom()
    parser.expect("eof")
    return atom


# ---------------------------------------------------------------------------
# grounding and normalisation


def _rule_variables(rule: Rule) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for atom in atoms_of(rule):
        for t in atom.args:
            if is_variable(t):
                seen.setdefault(t, None)
    return tuple(seen)


def _substitute_rule(rule: Rule, binding: dict[str, str]) -> Rule:
    def sub_lit(lit: Literal) -> Literal:
        if isinstance(lit, ObjLit):
            if lit.atom is None:
                return lit
            return ObjLit(lit.base.substitute(binding), lit.negs)
        return SubjLit(lit.modality, ObjLit(lit.atom.substitute(binding), lit.inner.negs), lit.neg)

    head = frozenset(a.substitute(binding) for a in rule.head)
    return Rule(head, tuple(sub_lit(l) for l in rule.body), pos=rule.pos)


def ground(program: Program) -> Program:
    """Full Herbrand instantiation: each variable ranges over every constant."""
    constants = sorted({t for a in program.atom_universe for t in a.args if not is_variable(t)})
    rules: list[Rule] = []
    for rule in program.rules:
        variables = _rule_variables(rule)
        if not variables:
            rules.append(rule)
            continue
        if not constants:
            raise GroundingError(f"rule {rule} has variables but the program has no constants")
        for values in product(constants, repeat=len(variables)):
            rules.append(_substitute_rule(rule, dict(zip(variables, values))))
    return Program.of(rules, program.extra_atoms)


def is_ground(program: Program) -> bool:
    return all(a.is_ground for a in program.atom_universe)


def eliminate_m(program: Program) -> Program:
    """Rewrite M l to not K not' l and not M l to K not' l (K-literals untouched)."""

    def rewrite(lit: Literal) -> Literal:
        if isinstance(lit, SubjLit) and lit.modality == "M":
            return SubjLit("K", default_negate(lit.inner), not lit.neg)
        return lit

    rules = tuple(Rule(r.head, tuple(rewrite(l) for l in r.body), pos=r.pos) for r in program.rules)
    return Program.of(rules, program.extra_atoms)


def add_strong_negation_constraints(program: Program) -> Program:
    """Add the implicit constraint `:- a, -a.` for every strongly negated atom."""
    rules = list(program.rules)
    present = set(rules)
    for atom in sorted(program.atom_universe, key=atom_key):
        if not atom.strong_neg:
            continue
        constraint = Rule(frozenset(), (ObjLit(atom.positive()), ObjLit(atom)))
        if constraint not in present:
            rules.append(constraint)
            present.add(constraint)
    return Program.of(rules, program.extra_atoms)


def load_program(text: str) -> Program:
    """parse -> ground -> strong-negation closure; the standard input pipeline."""
    return add_strong_negation_constraints(ground(parse_program(text)))


# ---------------------------------------------------------------------------
# canonical simplification


def const_truth(lit: ObjLit) -> bool | None:
    """Truth value of a constant-based literal, None for atom-based ones."""
    if lit.atom is not None:
        return None
    return (lit.base is TOP) ^ (lit.negs % 2 == 1)


def literal_sort_key(lit: Literal) -> tuple:
    return (isinstance(lit, SubjLit), str(lit))


def canonicalize_program(program: Program) -> Program:
    """Evaluate constant literals, drop true conjuncts and dead rules, sort.

    Reducts are produced verbatim (with ⊤/⊥ left in place); program-level
    comparisons go through this explicit pass instead.
    """
    rules = []
    for rule in program.rules:
        body = []
        dead = False
        for lit in rule.body:
            value = const_truth(lit) if isinstance(lit, ObjLit) else None
            if value is True:
                continue
            if value is False:
                dead = True
                break
            body.append(lit)
        if dead:
            continue
        rules.append(Rule(rule.head, tuple(sorted(body, key=literal_sort_key))))
    rules = sorted(set(rules), key=str)
    return Program.of(rules)


def same_program(p1: Program, p2: Program) -> bool:
    """Equality modulo canonical simplification."""
    return canonicalize_program(p1).rules == canonicalize_program(p2).rules
