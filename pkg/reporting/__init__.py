""" __init__.py for reporting """
from reporting.report import RunReport, format_report, PASS, FAIL, BUDGET_EXCEEDED
from reporting.cache import ResultsCache, cache_key
from reporting.runfile import LoadRunfile
