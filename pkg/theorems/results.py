SATISFIED = 'satisfied'
FAILED = 'failed'
VACUOUS = 'vacuous'

VERIFIED = 'verified'
REFUTED = 'refuted'
NOT_APPLICABLE = 'not-applicable'

HYPOTHESIS_STATES = (SATISFIED, FAILED, VACUOUS)
CONCLUSION_STATES = (VERIFIED, REFUTED, NOT_APPLICABLE)


class CheckResult(object):
    """Outcome of one theorem check on one instance.

    ``witness`` holds plain data only (lengths, dimensions, chosen
    elements as strings, presentations via ``to_data``).
    """

    def __init__(self, name, instance, hypothesis, conclusion, witness=None):
        if hypothesis not in HYPOTHESIS_STATES:
            raise ValueError('unknown hypothesis status %r' % hypothesis)
        if conclusion not in CONCLUSION_STATES:
            raise ValueError('unknown conclusion status %r' % conclusion)
        if conclusion != NOT_APPLICABLE and hypothesis != SATISFIED:
            raise ValueError('a %s conclusion needs a satisfied hypothesis'
                             % conclusion)
        self.name = name
        self.instance = instance
        self.hypothesis = hypothesis
        self.conclusion = conclusion
        self.witness = witness or {}

    @classmethod
    def vacuous(cls, name, instance, witness=None):
        return cls(name, instance, VACUOUS, NOT_APPLICABLE, witness)

    @property
    def refuted(self):
        return self.conclusion == REFUTED

    def to_data(self):
        return {'check': self.name, 'instance': self.instance,
                'hypothesis': self.hypothesis,
                'conclusion': self.conclusion, 'witness': self.witness}

    def __repr__(self):
        return '<CheckResult %s: %s/%s>' % (self.name, self.hypothesis,
                                            self.conclusion)
