"""Inclusions of theories ``T ⊆ T′``.

``T′`` includes ``T`` when the declarations of ``T`` are an initial segment of
those of ``T′`` and every axiom of ``T`` is an axiom of ``T′``, possibly under
another name. Proofs and Lindenbaum–Tarski elements then move along unchanged
apart from the names cited by axiom nodes.
"""

import dataclasses
import logging
from typing import Dict

from dfolkit.constants import DEFAULT_FUEL
from dfolkit.dfol.proofs import Proof, ProofCheck, ProofMode, ProofRule, check_proof
from dfolkit.dfol.theory import Theory
from dfolkit.doctrine.lindenbaum import LTDoctrine, Prop
from dfolkit.exceptions import DoctrineError

logger = logging.getLogger(__name__)


class TheoryInclusion:
    """``T ⊆ T′``.

    Raises:
        DoctrineError: If ``target`` does not include ``source``
    """

    def __init__(self, source: Theory, target: Theory, fuel: int = DEFAULT_FUEL):
        self.source = source
        self.target = target
        self.fuel = fuel
        self.names = self._validate()

    def _validate(self) -> Dict[str, str]:
        n = len(self.source.signature)
        sig = self.target.signature
        if len(sig) < n or sig.restrict(n) != self.source.signature:
            raise DoctrineError(
                f"the signature of {self.target.name} does not extend that of {self.source.name}",
                rule="inclusion",
            )
        names: Dict[str, str] = {}
        for name, seq in self.source:
            if self.target.axiom(name) == seq:
                names[name] = name
                continue
            match = next((other for other, s in self.target if s == seq), None)
            if match is None:
                raise DoctrineError(
                    f"axiom {name} of {self.source.name} is not an axiom of {self.target.name}",
                    rule="inclusion",
                )
            names[name] = match
        logger.debug("%s includes %s", self.target.name, self.source.name)
        return names

    def transport_proof(self, proof: Proof) -> Proof:
        """The same tree with axiom citations renamed into ``T′``."""
        premises = tuple(self.transport_proof(p) for p in proof.premises)
        name = proof.name
        if proof.rule is ProofRule.AXIOM and name is not None:
            name = self.names.get(name, name)
        return dataclasses.replace(proof, premises=premises, name=name)

    def transport_check(self, proof: Proof, mode: ProofMode = ProofMode.DFOL) -> ProofCheck:
        """Check ``proof`` in ``T`` and its transport in ``T′``."""
        check_proof(self.source, proof, mode, self.fuel)
        return check_proof(self.target, self.transport_proof(proof), mode, self.fuel)

    def transport_element(self, x: Prop, into: LTDoctrine) -> Prop:
        """``x`` as an element of the Lindenbaum–Tarski doctrine of ``T′``."""
        if into.theory != self.target:
            raise DoctrineError(f"{into.theory.name} is not {self.target.name}", rule="inclusion")
        return into.element(x.context, x.formula)
