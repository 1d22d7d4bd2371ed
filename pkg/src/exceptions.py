class UCycleError(Exception):
    """
    Base error of the package. Like an HTTP exception in a route, it carries a short ``detail``
    message that the command line prints verbatim.
    """

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidWordError(UCycleError, ValueError):
    pass


class OrderError(UCycleError, ValueError):
    pass


class GraphError(UCycleError):
    pass


class ConstructionError(UCycleError):
    pass
