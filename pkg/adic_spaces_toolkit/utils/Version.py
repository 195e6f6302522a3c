import adic_spaces_toolkit
from osbot_utils.type_safe.primitives.domains.common.safe_str.Safe_Str__Version import Safe_Str__Version
from osbot_utils.type_safe.Type_Safe                                            import Type_Safe
from osbot_utils.utils.Files                                                    import file_contents, path_combine
from adic_spaces_toolkit.config                                                 import TOOLKIT_NAME, TOOLKIT__TITLE

VERSION__FILE_NAME = 'version'


class Version(Type_Safe):
    file_name : str = VERSION__FILE_NAME

    def path_code_root(self):
        return adic_spaces_toolkit.path

    def path_version_file(self):
        return path_combine(self.path_code_root(), self.file_name)

    def value(self) -> Safe_Str__Version:                                        # the release tag, e.g. v0.1.0
        return Safe_Str__Version((file_contents(self.path_version_file()) or '').strip())

    def banner(self) -> str:                                                     # what `adic-toolkit --version` prints
        return f"{TOOLKIT__TITLE} {self.value()}"

    def json(self) -> dict:
        return dict(name=TOOLKIT_NAME, version=str(self.value()))


version__adic_spaces_toolkit = Version().value()
