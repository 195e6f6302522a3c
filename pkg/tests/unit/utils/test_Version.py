import adic_spaces_toolkit
from unittest                                   import TestCase
from osbot_utils.utils.Files                    import parent_folder, file_name
from adic_spaces_toolkit.utils.Version          import version__adic_spaces_toolkit, Version


class test_Version(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.version = Version()

    def test_path_version_file(self):
        with self.version as _:
            assert _.path_code_root()                    == adic_spaces_toolkit.path
            assert parent_folder(_.path_version_file()) == adic_spaces_toolkit.path
            assert file_name    (_.path_version_file()) == 'version'

    def test_value(self):
        assert self.version.value() == version__adic_spaces_toolkit
        assert str(self.version.value()).startswith('v')

    def test_banner_and_json(self):
        assert self.version.banner() == f"Adic-Spaces Toolkit {version__adic_spaces_toolkit}"
        assert self.version.json()   == dict(name='adic_spaces_toolkit', version=str(version__adic_spaces_toolkit))
