from .base import BaseScript, BaseSuite, Skipped, SuiteConfig, SuiteReport
from .higher_degree import define_Ps
from .registry import ALIASES, SUITES, centrality_criterion, check_phi_relations, get_suite, list_scripts, run_suite

__all__ = ['BaseScript', 'BaseSuite', 'Skipped', 'SuiteConfig', 'SuiteReport', 'ALIASES', 'SUITES',
           'centrality_criterion', 'check_phi_relations', 'define_Ps', 'get_suite', 'list_scripts', 'run_suite']
