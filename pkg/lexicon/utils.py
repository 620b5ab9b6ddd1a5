import multiprocessing


def is_rank_0() -> bool:
    return multiprocessing.parent_process() is None


def print_rank_0(*args, **kwargs):
    if is_rank_0():
        print(*args, **kwargs)
