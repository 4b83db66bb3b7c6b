from .element import DdcaElement
from .kb import Family, Identity, KnowledgeBase, Provenance, SymmetryExtension
from .rewriting import DdcaAlgebra, IrreducibleReport
from .scripts import DerivationScript, FailureDiff, ScriptResult, run_script
from .seeds import MODES, new_algebra
from .symmetries import apply_symmetry

__all__ = ['DdcaElement', 'Family', 'Identity', 'KnowledgeBase', 'Provenance', 'SymmetryExtension', 'DdcaAlgebra',
           'IrreducibleReport', 'DerivationScript', 'FailureDiff', 'ScriptResult', 'run_script', 'MODES',
           'new_algebra', 'apply_symmetry']
