from unittest                                           import TestCase
from adic_spaces_toolkit.models.J__Series__Budget       import J__Series__Budget
from adic_spaces_toolkit.utils.Toolkit__Errors          import Step_Budget__Exhausted


class test_J__Series__Budget(TestCase):

    def test_spend(self):
        with J__Series__Budget(limit=10) as _:
            _.spend(4)
            _.spend(6)
            assert _.steps == 10
            with self.assertRaises(Step_Budget__Exhausted):
                _.spend(1)
