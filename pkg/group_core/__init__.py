""" __init__.py for group_core """
from group_core.exceptions import CriticalNumberError, GroupSpecError
from group_core.groups import (GroupSpec, GroupElement, Subgroup,
                               parse_group_spec, group_add, group_negate,
                               enumerate_abelian_groups, subgroup_of_index_p,
                               quotient_project)
