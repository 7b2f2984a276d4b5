""" __init__.py for workflow_scripts """
