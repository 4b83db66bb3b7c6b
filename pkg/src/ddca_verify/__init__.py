__version__ = '0.1.0'

from .exceptions import *
from .ddca import DdcaAlgebra, KnowledgeBase, new_algebra, run_script
from .liealg import frame_for
from .suites import SuiteConfig, SuiteReport, centrality_criterion, check_phi_relations, define_Ps, run_suite

__all__ = ['__version__', 'DdcaError', 'ConfigurationError', 'DependencyError', 'DegreeCapError',
           'SymmetryDomainError', 'RegistrationError', 'InvariantViolation', 'VerificationFailed', 'DdcaAlgebra',
           'KnowledgeBase', 'new_algebra', 'run_script', 'frame_for', 'SuiteConfig', 'SuiteReport', 'run_suite',
           'centrality_criterion', 'check_phi_relations', 'define_Ps']
