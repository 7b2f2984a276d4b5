"""
Parameters for the critical number workflow; load with configuration.settings
"""
